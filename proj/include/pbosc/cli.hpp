#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "pbosc/pb_operators.hpp"

namespace pbosc::cli {

inline constexpr const char* kToolVersion = "0.1.0";

// Exit code contract: stable across releases.
inline constexpr int kExitPass = 0;
inline constexpr int kExitVerificationFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

/// One named residual with its declared tolerance.
struct NamedResidual {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  std::string scope = "full";
};

/// Envelope every report command emits as JSON on stdout.
/// pass == (all residuals <= their declared tolerances) && structural checks.
struct ReportEnvelope {
  std::string command;
  nlohmann::json parameters;
  nlohmann::json results;
  std::vector<NamedResidual> residuals;
  bool pass = false;

  nlohmann::json to_json() const;
};

/// JSON family schema: {"s", "dim", "generators": {name: matrix}} with
/// complex entries as [re, im] and matrices as row-major arrays of rows.
nlohmann::json family_to_json(const OscillatorFamily& family);
OscillatorFamily family_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const nlohmann::json& j);

/// `build`: write the oscillator family at cutoff s as JSON to out_path.
int cmd_build(int s, const std::string& out_path, const Tolerance& tol,
              std::ostream& err);

/// `closure`: close {a, a_dag, A} at cutoff s, certify su(s+1), print the
/// report envelope. Optional out_path duplicates stdout to a file.
int cmd_closure(int s, const Tolerance& tol, std::ostream& out,
                std::ostream& err, const std::string& out_path = "");

/// `structure-constants`: CSV of nonzero f[a][b][c] (a < b rows only;
/// antisymmetric completion implied), canonically ordered, 15 significant
/// digits.
int cmd_structure_constants(int s, const std::string& out_path,
                            const Tolerance& tol, std::ostream& err);

/// `phase`: CSV rows (m, theta_m, p_m) for the state given by state_spec
/// ("n:<int>" or "file:<path>" with one "re [im]" amplitude per line).
int cmd_phase(int s, double theta0, const std::string& state_spec,
              const Tolerance& tol, std::ostream& out, std::ostream& err,
              const std::string& out_path = "");

/// `susy`: superalgebra residual report, Hamiltonian-form equivalence
/// residual, and the (m, C, energy) table over the safe window.
int cmd_susy(int k, int D, double omega, double omega0, Complex g,
             double Omega, const Tolerance& tol, std::ostream& out,
             std::ostream& err, const std::string& out_path = "");

}  // namespace pbosc::cli
