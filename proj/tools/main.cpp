#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "pbosc/cli.hpp"

namespace cli = pbosc::cli;

int main(int argc, char** argv) {
  CLI::App app{"pbosc: truncated-oscillator operators, su(n) closure "
               "certification, phase-operator diagnostics, and the "
               "supersymmetric sector"};
  app.require_subcommand(1);

  pbosc::Tolerance tol;
  std::string out_path;
  app.add_option("--abs-tol", tol.abs_tol, "absolute tolerance")
      ->capture_default_str();
  app.add_option("--rel-tol", tol.rel_tol, "relative tolerance")
      ->capture_default_str();
  app.add_option("--out", out_path, "write output to this path");

  int s = 1;
  auto* build = app.add_subcommand(
      "build", "construct the oscillator family at cutoff s, write JSON");
  build->add_option("--s", s, "maximum occupation number")->required();
  build->fallthrough();

  auto* closure = app.add_subcommand(
      "closure", "close the algebra of {a, a_dag, A} and certify su(s+1)");
  closure->add_option("--s", s, "maximum occupation number")->required();
  closure->fallthrough();

  auto* structure = app.add_subcommand(
      "structure-constants", "emit structure constants of the closed algebra as CSV");
  structure->add_option("--s", s, "maximum occupation number")->required();
  structure->fallthrough();

  double theta0 = 0.0;
  std::string state_spec;
  auto* phase = app.add_subcommand(
      "phase", "phase distribution of a state over the phase-state grid");
  phase->add_option("--s", s, "maximum occupation number")->required();
  phase->add_option("--theta0", theta0, "reference phase (radians)")
      ->capture_default_str();
  phase->add_option("--state", state_spec, "'n:<int>' or 'file:<path>'")
      ->required();
  phase->fallthrough();

  int k = 1;
  int D = 12;
  double omega = 1.0;
  double omega0 = 1.0;
  double g_re = 0.1;
  double g_im = 0.0;
  double Omega = 1.0;
  auto* susy = app.add_subcommand(
      "susy", "superalgebra residual report and occupation-number table");
  susy->add_option("--k", k, "photons per transition")->required();
  susy->add_option("--D", D, "per-block truncation dimension")->required();
  susy->add_option("--omega", omega, "mode frequency")->capture_default_str();
  susy->add_option("--omega0", omega0, "transition frequency")
      ->capture_default_str();
  susy->add_option("--g-re", g_re, "coupling, real part")->capture_default_str();
  susy->add_option("--g-im", g_im, "coupling, imaginary part")
      ->capture_default_str();
  susy->add_option("--Omega", Omega, "oscillator quantum for the energy table")
      ->capture_default_str();
  susy->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kExitPass : cli::kExitUsage;
  }

  try {
    if (build->parsed()) {
      return cli::cmd_build(s, out_path, tol, std::cerr);
    }
    if (closure->parsed()) {
      return cli::cmd_closure(s, tol, std::cout, std::cerr, out_path);
    }
    if (structure->parsed()) {
      return cli::cmd_structure_constants(s, out_path, tol, std::cerr);
    }
    if (phase->parsed()) {
      return cli::cmd_phase(s, theta0, state_spec, tol, std::cout, std::cerr,
                            out_path);
    }
    if (susy->parsed()) {
      return cli::cmd_susy(k, D, omega, omega0, {g_re, g_im}, Omega, tol,
                           std::cout, std::cerr, out_path);
    }
  } catch (const pbosc::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kExitUsage;
  } catch (const pbosc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kExitVerificationFailure;
  }
  return cli::kExitUsage;
}
