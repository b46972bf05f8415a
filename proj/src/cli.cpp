#include "pbosc/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "pbosc/lie_closure.hpp"
#include "pbosc/phase.hpp"
#include "pbosc/susy.hpp"

namespace pbosc::cli {

namespace {

using nlohmann::json;

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw DomainError("complex entries must be [re, im] arrays");
  }
  return Complex(j[0].get<double>(), j[1].get<double>());
}

std::string format_g15(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

bool write_text_file(const std::string& path, const std::string& content,
                     std::ostream& err) {
  std::ofstream out(path);
  if (!out) {
    err << "error: cannot open '" << path << "' for writing\n";
    return false;
  }
  out << content;
  out.flush();
  if (!out) {
    err << "error: failed writing '" << path << "'\n";
    return false;
  }
  return true;
}

int emit_report(const ReportEnvelope& envelope, std::ostream& out,
                std::ostream& err, const std::string& out_path) {
  const std::string text = envelope.to_json().dump(2) + "\n";
  out << text;
  if (!out_path.empty() && !write_text_file(out_path, text, err)) {
    return kExitIo;
  }
  return envelope.pass ? kExitPass : kExitVerificationFailure;
}

void push_relations(ReportEnvelope& envelope, const RelationReport& report,
                    const std::string& prefix) {
  for (const auto& check : report.checks) {
    envelope.residuals.push_back(
        {prefix + check.name, check.residual, check.tolerance, check.scope});
  }
}

}  // namespace

json ReportEnvelope::to_json() const {
  json residuals_json = json::array();
  for (const auto& r : residuals) {
    residuals_json.push_back({{"name", r.name},
                              {"value", r.value},
                              {"tolerance", r.tolerance},
                              {"scope", r.scope}});
  }
  return json{{"command", command},     {"parameters", parameters},
              {"results", results},     {"residuals", residuals_json},
              {"pass", pass},           {"tool_version", kToolVersion}};
}

json matrix_to_json(const CMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      row.push_back(complex_to_json(m(i, j)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

CMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) {
    throw DomainError("matrix JSON must be a nonempty array of rows");
  }
  const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
  const Eigen::Index cols = static_cast<Eigen::Index>(j[0].size());
  CMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (static_cast<Eigen::Index>(j[i].size()) != cols) {
      throw DomainError("matrix JSON has ragged rows");
    }
    for (Eigen::Index c = 0; c < cols; ++c) {
      m(i, c) = complex_from_json(j[i][c]);
    }
  }
  return m;
}

json family_to_json(const OscillatorFamily& family) {
  json generators;
  generators["a"] = matrix_to_json(family.a);
  generators["a_dag"] = matrix_to_json(family.a_dag);
  generators["A"] = matrix_to_json(family.A);
  for (const auto& [name, matrix] : family.derived) {
    generators[name] = matrix_to_json(matrix);
  }
  return json{{"s", family.s}, {"dim", family.dim}, {"generators", generators}};
}

OscillatorFamily family_from_json(const json& j) {
  OscillatorFamily family;
  family.s = j.at("s").get<int>();
  family.dim = j.at("dim").get<int>();
  if (family.s < 1 || family.dim != family.s + 1) {
    throw DomainError("family JSON: inconsistent s/dim");
  }
  const json& generators = j.at("generators");
  family.a = matrix_from_json(generators.at("a"));
  family.a_dag = matrix_from_json(generators.at("a_dag"));
  family.A = matrix_from_json(generators.at("A"));
  for (const auto& name : ladder_names()) {
    if (generators.contains(name)) {
      family.derived[name] = matrix_from_json(generators.at(name));
    }
  }
  for (const auto& [name, value] : generators.items()) {
    const CMatrix m = matrix_from_json(value);
    if (m.rows() != family.dim || m.cols() != family.dim) {
      throw DomainError("family JSON: generator '" + name +
                        "' has wrong dimensions");
    }
  }
  return family;
}

int cmd_build(int s, const std::string& out_path, const Tolerance& tol,
              std::ostream& err) {
  (void)tol;
  if (out_path.empty()) {
    err << "error: build requires --out <path>\n";
    return kExitUsage;
  }
  OscillatorFamily family;
  try {
    family = build_family(s);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (!write_text_file(out_path, family_to_json(family).dump(2) + "\n", err)) {
    return kExitIo;
  }
  return kExitPass;
}

int cmd_closure(int s, const Tolerance& tol, std::ostream& out,
                std::ostream& err, const std::string& out_path) {
  OscillatorFamily family;
  try {
    family = build_family(s);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  ReportEnvelope envelope;
  envelope.command = "closure";
  envelope.parameters = {
      {"s", s}, {"abs_tol", tol.abs_tol}, {"rel_tol", tol.rel_tol}};
  const int expected = (s + 1) * (s + 1) - 1;

  try {
    const LieBasis basis =
        close_algebra({family.a, family.a_dag, family.A}, tol);
    const SuCertificate cert = certify_su_report(basis);
    envelope.results = {{"s", s},
                        {"n", cert.n},
                        {"dimension", cert.dimension},
                        {"expected_dimension", expected},
                        {"closure_rounds", basis.closure_rounds}};
    if (s == 2) {
      envelope.results["lambda8_convention"] =
          "lambda8 = A/sqrt(3): traceless diagonal completion orthogonal to "
          "lambda3 with tr(lambda8^2) = 2";
    }
    json clauses = json::array();
    for (const auto& clause : cert.clauses) {
      clauses.push_back({{"clause", clause.name},
                         {"pass", clause.pass},
                         {"residual", clause.residual},
                         {"tolerance", clause.tolerance}});
      envelope.residuals.push_back({"certificate:" + clause.name,
                                    clause.residual, clause.tolerance, "full"});
    }
    envelope.results["certificate"] = clauses;
    envelope.pass = cert.pass && cert.dimension == expected;
  } catch (const ClosureNotReached& e) {
    envelope.results = {{"s", s},
                        {"error", e.what()},
                        {"dimension_reached", e.dimension_reached},
                        {"expected_dimension", expected}};
    envelope.pass = false;
  }
  return emit_report(envelope, out, err, out_path);
}

int cmd_structure_constants(int s, const std::string& out_path,
                            const Tolerance& tol, std::ostream& err) {
  if (out_path.empty()) {
    err << "error: structure-constants requires --out <path>\n";
    return kExitUsage;
  }
  OscillatorFamily family;
  try {
    family = build_family(s);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  StructureConstants sc;
  try {
    const LieBasis basis =
        close_algebra({family.a, family.a_dag, family.A}, tol);
    sc = structure_constants(basis);
  } catch (const ClosureNotReached& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerificationFailure;
  }

  // Rows with a < b only; the antisymmetric completion is implied.
  std::ostringstream csv;
  csv << "a,b,c,f\n";
  for (int a = 0; a < sc.dimension; ++a) {
    for (int b = a + 1; b < sc.dimension; ++b) {
      for (int c = 0; c < sc.dimension; ++c) {
        const double value = sc.at(a, b, c);
        if (std::abs(value) > 1e-10) {
          csv << a << "," << b << "," << c << "," << format_g15(value) << "\n";
        }
      }
    }
  }
  if (!write_text_file(out_path, csv.str(), err)) {
    return kExitIo;
  }
  return kExitPass;
}

namespace {

CVector parse_state_spec(const std::string& spec, int dim) {
  if (spec.rfind("n:", 0) == 0) {
    const int n = std::stoi(spec.substr(2));
    if (n < 0 || n >= dim) {
      throw DomainError("state index n=" + std::to_string(n) +
                        " outside 0.." + std::to_string(dim - 1));
    }
    CVector state = CVector::Zero(dim);
    state(n) = 1.0;
    return state;
  }
  if (spec.rfind("file:", 0) == 0) {
    const std::string path = spec.substr(5);
    std::ifstream in(path);
    if (!in) {
      throw DomainError("cannot read state file '" + path + "'");
    }
    std::vector<Complex> amplitudes;
    std::string line;
    while (std::getline(in, line)) {
      std::istringstream row(line);
      double re = 0.0, im = 0.0;
      if (!(row >> re)) continue;  // blank line
      row >> im;                   // optional imaginary part
      amplitudes.emplace_back(re, im);
    }
    if (static_cast<int>(amplitudes.size()) != dim) {
      throw DomainError("state file '" + path + "' has " +
                        std::to_string(amplitudes.size()) +
                        " amplitudes, expected " + std::to_string(dim));
    }
    CVector state(dim);
    for (int i = 0; i < dim; ++i) state(i) = amplitudes[i];
    return state;
  }
  throw DomainError("state spec must be 'n:<int>' or 'file:<path>'");
}

}  // namespace

int cmd_phase(int s, double theta0, const std::string& state_spec,
              const Tolerance& tol, std::ostream& out, std::ostream& err,
              const std::string& out_path) {
  PhaseBasis basis;
  CVector state;
  std::vector<double> probs;
  try {
    basis = build_phase_basis(s, theta0);
    state = parse_state_spec(state_spec, s + 1);
    probs = phase_distribution(state, basis, tol);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  double total = 0.0;
  for (double p : probs) total += p;
  std::ostringstream csv;
  csv << "m,theta_m,p_m\n";
  for (int m = 0; m <= s; ++m) {
    csv << m << "," << format_g15(basis.thetas[m]) << ","
        << format_g15(probs[m]) << "\n";
  }
  out << csv.str();
  if (!out_path.empty() && !write_text_file(out_path, csv.str(), err)) {
    return kExitIo;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    err << "error: probabilities sum to " << format_g15(total) << "\n";
    return kExitVerificationFailure;
  }
  return kExitPass;
}

int cmd_susy(int k, int D, double omega, double omega0, Complex g,
             double Omega, const Tolerance& tol, std::ostream& out,
             std::ostream& err, const std::string& out_path) {
  if (k < 1 || D <= k) {
    err << "error: require D > k >= 1\n";
    return kExitUsage;
  }
  if (omega <= 0.0 || Omega <= 0.0) {
    err << "error: require omega > 0 and Omega > 0\n";
    return kExitUsage;
  }

  ReportEnvelope envelope;
  envelope.command = "susy";
  envelope.parameters = {{"k", k},
                         {"D", D},
                         {"omega", omega},
                         {"omega0", omega0},
                         {"g", complex_to_json(g)},
                         {"Omega", Omega},
                         {"abs_tol", tol.abs_tol},
                         {"rel_tol", tol.rel_tol}};

  const SusyRep rep = build_susy_rep(k, D);
  const RelationReport relations = verify_susy_algebra(rep, tol);
  push_relations(envelope, relations, "susy:");

  const JcParams params{omega, omega0, g, k};
  const double equivalence =
      max_abs(jc_hamiltonian_direct(params, D) -
              jc_hamiltonian_susy_form(params, rep));
  envelope.residuals.push_back(
      {"hamiltonian-form-equivalence", equivalence, 1e-11, "full"});

  json relation_rows = json::array();
  for (const auto& check : relations.checks) {
    relation_rows.push_back({{"name", check.name},
                             {"scope", check.scope},
                             {"residual", check.residual},
                             {"tolerance", check.tolerance},
                             {"pass", check.pass}});
  }

  json table = json::array();
  bool nprime_pass = true;
  for (int m = 0; m + 2 * k <= D - 1; ++m) {
    const NprimeCheck check = nprime_eigen_check(k, m, D);
    const double c = static_cast<double>(check.expected);
    const double residual =
        std::max(check.top_residual, check.bottom_residual);
    table.push_back({{"m", m},
                     {"C", check.expected},
                     {"energy", 0.5 * c * Omega},
                     {"residual", residual}});
    envelope.residuals.push_back({"nprime:m=" + std::to_string(m), residual,
                                  1e-12 * std::max(1.0, c), "windowed"});
    nprime_pass = nprime_pass && check.pass;
  }

  envelope.results = {{"k", k},
                      {"D", D},
                      {"window", rep.window},
                      {"relations", relation_rows},
                      {"hamiltonian_form_equivalence", equivalence},
                      {"nprime_table", table}};
  envelope.pass =
      relations.all_pass() && equivalence <= 1e-11 && nprime_pass;
  return emit_report(envelope, out, err, out_path);
}

}  // namespace pbosc::cli
