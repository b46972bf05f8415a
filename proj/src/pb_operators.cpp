#include "pbosc/pb_operators.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace pbosc {

namespace {

// Verify that `canonical` matches `commutator_route / coefficient` and record
// the provenance entry.
void install_derived(OscillatorFamily& family, const std::string& name,
                     CMatrix canonical, const CMatrix& commutator_route,
                     double coefficient, const std::string& expression) {
  const double residual = max_abs(commutator_route / coefficient - canonical);
  if (residual > 1e-10) {
    std::ostringstream msg;
    msg << "derive_ladder: " << name << " deviates from " << expression
        << " by " << residual;
    throw NumericError(msg.str());
  }
  family.derived[name] = std::move(canonical);
  family.provenance[name] = Provenance{expression, coefficient, residual};
}

}  // namespace

CMatrix OscillatorFamily::number_op() const {
  CMatrix n = CMatrix::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) n(i, i) = static_cast<double>(i);
  return n;
}

const std::vector<std::string>& ladder_names() {
  static const std::vector<std::string> names = {"M", "M_dag", "K", "F",
                                                 "F_dag"};
  return names;
}

OscillatorFamily build_family(int s) {
  if (s < 1) {
    throw DomainError("build_family: require s >= 1, got " +
                      std::to_string(s));
  }
  OscillatorFamily family;
  family.s = s;
  family.dim = s + 1;

  family.a = CMatrix::Zero(family.dim, family.dim);
  for (int n = 1; n <= s; ++n) {
    family.a(n - 1, n) = std::sqrt(static_cast<double>(n));
  }
  family.a_dag = family.a.adjoint();

  // A = [a, a_dag]: identity except entry (s, s) = -s.
  family.A = CMatrix::Identity(family.dim, family.dim);
  family.A(s, s) = -static_cast<double>(s);

  if (s >= 2) {
    family = derive_ladder(std::move(family));
  }
  return family;
}

OscillatorFamily derive_ladder(OscillatorFamily family) {
  const int s = family.s;
  if (s == 1) {
    throw LadderNotApplicable(
        "derive_ladder: s=1 closes on {a, a_dag, A}; no derived generators");
  }
  const int d = family.dim;
  const double sq_s = std::sqrt(static_cast<double>(s));
  const double m_coef = (s + 1) * sq_s;
  const double f_coef = std::sqrt(static_cast<double>(s - 1));

  CMatrix M = CMatrix::Zero(d, d);
  M(s - 1, s) = -1.0;
  CMatrix M_dag = M.adjoint();
  CMatrix K = CMatrix::Zero(d, d);
  K(s - 1, s - 1) = -1.0;
  K(s, s) = 1.0;
  CMatrix F = CMatrix::Zero(d, d);
  F(s - 2, s) = 1.0;
  CMatrix F_dag = F.adjoint();

  install_derived(family, "M", M, commutator(family.a, family.A), m_coef,
                  "[a, A] / ((s+1) sqrt(s))");
  install_derived(family, "M_dag", M_dag, -commutator(family.a_dag, family.A),
                  m_coef, "-[a_dag, A] / ((s+1) sqrt(s))");
  install_derived(family, "K", K,
                  -commutator(family.derived.at("M"), family.derived.at("M_dag")),
                  1.0, "-[M, M_dag]");
  install_derived(family, "F", F, -commutator(family.a, family.derived.at("M")),
                  f_coef, "-[a, M] / sqrt(s-1)");
  install_derived(family, "F_dag", F_dag,
                  commutator(family.a_dag, family.derived.at("M_dag")), f_coef,
                  "[a_dag, M_dag] / sqrt(s-1)");
  return family;
}

bool RelationReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const RelationCheck& c) { return c.pass; });
}

double RelationReport::max_residual() const {
  double r = 0.0;
  for (const auto& c : checks) r = std::max(r, c.residual);
  return r;
}

RelationReport check_ladder_relations(const OscillatorFamily& family,
                                      const Tolerance& tol) {
  if (!family.has_ladder()) {
    throw DomainError("check_ladder_relations: derived ladder not present");
  }
  const int s = family.s;
  const double sq_s = std::sqrt(static_cast<double>(s));
  const double sq_sm1 = std::sqrt(static_cast<double>(s - 1));
  const double m_coef = (s + 1) * sq_s;
  const CMatrix& a = family.a;
  const CMatrix& ad = family.a_dag;
  const CMatrix& A = family.A;
  const CMatrix& M = family.derived.at("M");
  const CMatrix& Md = family.derived.at("M_dag");
  const CMatrix& K = family.derived.at("K");
  const CMatrix& F = family.derived.at("F");
  const CMatrix& Fd = family.derived.at("F_dag");

  RelationReport report;
  const double tolerance = std::max(tol.abs_tol, 1e-12);
  auto add = [&](const std::string& name, const CMatrix& lhs,
                 const CMatrix& rhs) {
    const double r = max_abs(lhs - rhs);
    report.checks.push_back({name, r, tolerance, r <= tolerance, "full", {}});
  };

  add("[a, A] = (s+1) sqrt(s) M", commutator(a, A), m_coef * M);
  add("[a_dag, A] = -(s+1) sqrt(s) M_dag", commutator(ad, A), -m_coef * Md);
  add("[M, M_dag] = -K", commutator(M, Md), -K);
  add("[A, M] = (1+s) M", commutator(A, M), double(1 + s) * M);
  add("[A, M_dag] = -(1+s) M_dag", commutator(A, Md), double(-(1 + s)) * Md);
  add("[a, M] = -sqrt(s-1) F", commutator(a, M), -sq_sm1 * F);
  add("[a_dag, M_dag] = sqrt(s-1) F_dag", commutator(ad, Md), sq_sm1 * Fd);
  add("[K, F] = -F", commutator(K, F), -F);
  add("[K, F_dag] = F_dag", commutator(K, Fd), Fd);
  add("[M, K] = 2 M", commutator(M, K), 2.0 * M);
  add("[M_dag, K] = -2 M_dag", commutator(Md, K), -2.0 * Md);

  if (s == 2) {
    add("[a_dag, M] = -sqrt(2) K", commutator(ad, M), -std::sqrt(2.0) * K);
    add("[a, M_dag] = sqrt(2) K", commutator(a, Md), std::sqrt(2.0) * K);
  }

  // The general-s coefficient of these two is not displayed; report the
  // observed HS projection onto K.
  const double k_norm2 = hs_inner(K, K).real();
  auto add_projected = [&](const std::string& name, const CMatrix& lhs) {
    const double c = (hs_inner(K, lhs) / k_norm2).real();
    const double r = max_abs(lhs - c * K);
    report.checks.push_back({name, r, tolerance, r <= tolerance, "full", c});
  };
  add_projected("[a_dag, M] = c K (observed c)", commutator(ad, M));
  add_projected("[a, M_dag] = c K (observed c)", commutator(a, Md));

  return report;
}

std::vector<BosonicLimitRow> bosonic_limit_report(const std::vector<int>& s_list,
                                                  int window) {
  if (s_list.empty()) {
    throw DomainError("bosonic_limit_report: empty s list");
  }
  if (window < 1) {
    throw DomainError("bosonic_limit_report: window must be >= 1");
  }
  for (int s : s_list) {
    if (window >= s) {
      throw DomainError("bosonic_limit_report: window " +
                        std::to_string(window) + " >= s " + std::to_string(s));
    }
  }

  std::vector<BosonicLimitRow> rows;
  rows.reserve(s_list.size());
  for (int s : s_list) {
    const OscillatorFamily family = build_family(s);
    BosonicLimitRow row;
    row.s = s;
    const CMatrix a_gap = family.A - CMatrix::Identity(family.dim, family.dim);
    row.a_block_residual = max_abs(a_gap.topLeftCorner(window, window));
    row.ladder_block_residual = 0.0;
    for (const auto& name : ladder_names()) {
      const CMatrix& g = family.derived.at(name);
      row.ladder_block_residual = std::max(
          row.ladder_block_residual, max_abs(g.topLeftCorner(window, window)));
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace pbosc
