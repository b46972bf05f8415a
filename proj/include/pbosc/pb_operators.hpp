#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pbosc/linalg.hpp"

namespace pbosc {

/// How a derived generator was obtained: the defining commutator expression,
/// the scalar the displayed relation carries, and the max-abs mismatch
/// between the commutator route and the stored single-entry matrix.
struct Provenance {
  std::string expression;
  double coefficient = 1.0;
  double residual = 0.0;
};

/// The truncated oscillator generators at cutoff s (dimension s+1).
///
/// a, a_dag, A are the defining generators; `derived` holds the commutator
/// ladder {M, M_dag, K, F, F_dag} for s >= 2 and is empty for s = 1, where
/// the algebra already closes on the defining three.
struct OscillatorFamily {
  int s = 0;
  int dim = 0;  // s + 1
  CMatrix a;
  CMatrix a_dag;
  CMatrix A;
  std::map<std::string, CMatrix> derived;
  std::map<std::string, Provenance> provenance;

  bool has_ladder() const { return !derived.empty(); }

  /// Occupation-number operator a_dag * a = diag(0..s).
  CMatrix number_op() const;
};

/// Canonical key order of the derived ladder generators.
const std::vector<std::string>& ladder_names();

/// Build {a, a_dag, A} at cutoff s >= 1 and, for s >= 2, the derived ladder.
/// Throws DomainError for s < 1.
OscillatorFamily build_family(int s);

/// Populate the derived ladder of an s >= 2 family:
///   M      = [a, A] / ((s+1) sqrt(s))
///   M_dag  = -[a_dag, A] / ((s+1) sqrt(s))
///   K      = -[M, M_dag]
///   F      = -[a, M] / sqrt(s-1)
///   F_dag  = [a_dag, M_dag] / sqrt(s-1)
/// Stored matrices are the exact single-entry forms; the scalar prefactors
/// and the commutator-route residuals live in `provenance`.
/// Throws LadderNotApplicable for s = 1.
OscillatorFamily derive_ladder(OscillatorFamily family);

/// One verified operator identity.
struct RelationCheck {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string scope = "full";  // "full" or "windowed"
  std::optional<double> observed_coefficient;
};

struct RelationReport {
  std::vector<RelationCheck> checks;

  bool all_pass() const;
  double max_residual() const;
};

/// Residuals of every displayed commutator relation of the ladder, plus the
/// observed HS-projection coefficients of [a_dag, M] and [a, M_dag] onto K
/// (only the s=2 versions of those two are displayed with a coefficient).
/// Requires the derived ladder; throws DomainError if absent.
RelationReport check_ladder_relations(const OscillatorFamily& family,
                                      const Tolerance& tol = {});

struct BosonicLimitRow {
  int s = 0;
  double a_block_residual = 0.0;       // ||(A - I) on the window block||
  double ladder_block_residual = 0.0;  // max over derived generators
};

/// Restriction of A - I and of every derived generator to the top-left
/// window x window block, for each s in s_list. Both residuals are exactly
/// zero: the cutoff only touches entries at indices >= s-1.
/// Throws DomainError unless 1 <= window < min(s_list).
std::vector<BosonicLimitRow> bosonic_limit_report(const std::vector<int>& s_list,
                                                  int window);

}  // namespace pbosc
