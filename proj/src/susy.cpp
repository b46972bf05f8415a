#include "pbosc/susy.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace pbosc {

namespace {

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

CMatrix matrix_power(const CMatrix& x, int k) {
  CMatrix out = CMatrix::Identity(x.rows(), x.cols());
  for (int i = 0; i < k; ++i) out = out * x;
  return out;
}

CMatrix embed_blocks(const CMatrix& top, const CMatrix& bottom) {
  const Eigen::Index d = top.rows();
  CMatrix out = CMatrix::Zero(2 * d, 2 * d);
  out.topLeftCorner(d, d) = top;
  out.bottomRightCorner(d, d) = bottom;
  return out;
}

void require_safe_window(int k, int m, int D, const char* op) {
  if (m < 0 || k < 1) {
    throw DomainError(std::string(op) + ": require m >= 0 and k >= 1");
  }
  if (m + k > D - 1 - k) {
    throw DomainError(std::string(op) + ": (m=" + std::to_string(m) +
                      ", k=" + std::to_string(k) +
                      ") outside the doubly-safe window of D=" +
                      std::to_string(D));
  }
}

// Restriction of a block operator to span{|m> top, |m+k> bottom}.
Eigen::Matrix2cd restrict_to_cell(const CMatrix& x, int m, int k, int D) {
  const int e1 = m;
  const int e2 = D + m + k;
  Eigen::Matrix2cd r;
  r << x(e1, e1), x(e1, e2), x(e2, e1), x(e2, e2);
  return r;
}

}  // namespace

std::uint64_t binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) {
    throw DomainError("binomial: require 0 <= k <= n");
  }
  k = std::min(k, n - k);
  std::uint64_t c = 1;
  for (int i = 1; i <= k; ++i) {
    const std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
    if (c > std::numeric_limits<std::uint64_t>::max() / num) {
      throw DomainError("binomial: overflow");
    }
    c = c * num / i;  // exact: c*num is divisible by i at each step
  }
  return c;
}

SusyRep build_susy_rep(int k, int D) {
  if (k < 1 || D <= k) {
    throw DomainError("build_susy_rep: require D > k >= 1, got k=" +
                      std::to_string(k) + ", D=" + std::to_string(D));
  }
  const OscillatorFamily fam = build_family(D - 1);
  const CMatrix& a = fam.a;
  const CMatrix ak = matrix_power(a, k);
  const CMatrix adk = ak.adjoint();
  const double kfac = factorial(k);
  const double sqrt_kfac = std::sqrt(kfac);
  const CMatrix eye = CMatrix::Identity(D, D);

  SusyRep rep;
  rep.k = k;
  rep.D = D;
  rep.window = D - k;

  rep.Q = CMatrix::Zero(2 * D, 2 * D);
  rep.Q.topRightCorner(D, D) = ak / sqrt_kfac;
  rep.Q_dag = rep.Q.adjoint();
  rep.sigma_z = embed_blocks(eye, -eye);
  rep.N = embed_blocks(fam.a_dag * a + (0.5 * k) * eye,
                       a * fam.a_dag - (0.5 * k) * eye);
  rep.Nprime = embed_blocks(ak * adk / kfac, adk * ak / kfac);

  CMatrix p = CMatrix::Zero(D, D);
  for (int n = 0; n < rep.window; ++n) p(n, n) = 1.0;
  rep.projector_W = embed_blocks(p, p);
  return rep;
}

RelationReport verify_susy_algebra(const SusyRep& rep, const Tolerance& tol) {
  const CMatrix& Q = rep.Q;
  const CMatrix& Qd = rep.Q_dag;
  const CMatrix& N = rep.N;
  const CMatrix& Np = rep.Nprime;
  const CMatrix& sz = rep.sigma_z;
  const CMatrix& P = rep.projector_W;

  RelationReport report;
  const double windowed_tol = std::max(tol.abs_tol, 1e-10);
  auto add_full = [&](const std::string& name, const CMatrix& gap) {
    const double r = max_abs(gap);
    report.checks.push_back({name, r, 0.0, r == 0.0, "full", {}});
  };
  auto add_windowed = [&](const std::string& name, const CMatrix& gap) {
    const double r = max_abs(P * gap * P);
    report.checks.push_back(
        {name, r, windowed_tol, r <= windowed_tol, "windowed", {}});
  };
  auto add_both = [&](const std::string& name, const CMatrix& gap) {
    add_full(name, gap);
    add_windowed(name, gap);
  };

  // Structural relations: exact on the full truncated space.
  add_both("Q^2 = 0", Q * Q);
  add_both("(Q_dag)^2 = 0", Qd * Qd);
  add_both("{Q, sigma_z} = 0", anticommutator(Q, sz));
  add_both("{Q_dag, sigma_z} = 0", anticommutator(Qd, sz));
  add_both("[Q, sigma_z] = -2Q", commutator(Q, sz) + 2.0 * Q);
  add_both("[Q_dag, sigma_z] = 2Q_dag", commutator(Qd, sz) - 2.0 * Qd);

  // Window-dependent relations: truncation touches the top states.
  add_windowed("[Q, Q_dag] = Nprime sigma_z", commutator(Q, Qd) - Np * sz);
  add_windowed("{Q, Q_dag} = Nprime", anticommutator(Q, Qd) - Np);
  add_windowed("[N, Nprime] = 0", commutator(N, Np));
  add_windowed("[N, Q] = -Q", commutator(N, Q) + Q);
  add_windowed("[N, Q_dag] = Q_dag", commutator(N, Qd) - Qd);
  add_windowed("(Q_dag - Q)^2 = -Nprime",
               (Qd - Q) * (Qd - Q) + Np);
  return report;
}

CMatrix jc_hamiltonian_direct(const JcParams& p, int D) {
  if (p.k < 1 || D <= p.k) {
    throw DomainError("jc_hamiltonian_direct: require D > k >= 1");
  }
  if (p.omega <= 0.0) {
    throw DomainError("jc_hamiltonian_direct: require omega > 0");
  }
  const OscillatorFamily fam = build_family(D - 1);
  const CMatrix number = fam.a_dag * fam.a;
  const CMatrix ak = matrix_power(fam.a, p.k);
  const CMatrix eye = CMatrix::Identity(D, D);

  CMatrix h = CMatrix::Zero(2 * D, 2 * D);
  h.topLeftCorner(D, D) = p.omega * number + (0.5 * p.omega0) * eye;
  h.bottomRightCorner(D, D) = p.omega * number - (0.5 * p.omega0) * eye;
  h.topRightCorner(D, D) = std::conj(p.g) * ak;        // g* a^k sigma_+
  h.bottomLeftCorner(D, D) = p.g * ak.adjoint();       // g a_dag^k sigma_-

  const double asym = max_abs(h - h.adjoint());
  if (asym > 1e-12 * std::max(1.0, max_abs(h))) {
    throw HermiticityError("jc_hamiltonian_direct: assembled H not Hermitian",
                           asym);
  }
  return h;
}

CMatrix jc_hamiltonian_susy_form(const JcParams& p, const SusyRep& rep) {
  if (p.k != rep.k) {
    throw DomainError("jc_hamiltonian_susy_form: params have k=" +
                      std::to_string(p.k) + " but rep has k=" +
                      std::to_string(rep.k));
  }
  if (p.omega <= 0.0) {
    throw DomainError("jc_hamiltonian_susy_form: require omega > 0");
  }
  const int D = rep.D;
  const OscillatorFamily fam = build_family(D - 1);
  const CMatrix number = fam.a_dag * fam.a;
  const CMatrix eye2d = CMatrix::Identity(2 * D, 2 * D);

  // N in occupation-number form: a_dag a + ((k-1)/2) sigma_z + 1/2; the
  // coupling carries the sqrt(k!) from Q's normalization. With these the
  // rewritten form matches the direct assembly entrywise on the truncated
  // space.
  CMatrix n_op = embed_blocks(number, number) +
                 (0.5 * (p.k - 1)) * rep.sigma_z + 0.5 * eye2d;
  const double sqrt_kfac = std::sqrt(factorial(p.k));

  return p.omega * n_op + (0.5 * (p.omega - p.delta())) * rep.sigma_z +
         (p.g * sqrt_kfac) * rep.Q_dag + (std::conj(p.g) * sqrt_kfac) * rep.Q -
         (0.5 * p.omega) * eye2d;
}

QuasiAlgebraCell quasialgebra_cell(int m, int k) {
  if (m < 0 || k < 1) {
    throw DomainError("quasialgebra_cell: require m >= 0 and k >= 1, got m=" +
                      std::to_string(m) + ", k=" + std::to_string(k));
  }
  return QuasiAlgebraCell{m, k, binomial(m + k, k)};
}

NprimeCheck nprime_eigen_check(int k, int m, int D) {
  require_safe_window(k, m, D, "nprime_eigen_check");
  const SusyRep rep = build_susy_rep(k, D);
  const std::uint64_t expected = binomial(m + k, k);
  const double c = static_cast<double>(expected);

  CVector top = CVector::Zero(2 * D);
  top(m) = 1.0;
  CVector bottom = CVector::Zero(2 * D);
  bottom(D + m + k) = 1.0;

  NprimeCheck check;
  check.m = m;
  check.k = k;
  check.expected = expected;
  check.top_residual = (rep.Nprime * top - c * top).cwiseAbs().maxCoeff();
  check.bottom_residual =
      (rep.Nprime * bottom - c * bottom).cwiseAbs().maxCoeff();
  const double tolerance = 1e-12 * std::max(1.0, c);
  check.pass =
      check.top_residual <= tolerance && check.bottom_residual <= tolerance;
  return check;
}

RelationReport quasialgebra_check(const QuasiAlgebraCell& cell, int D) {
  require_safe_window(cell.k, cell.m, D, "quasialgebra_check");
  const SusyRep rep = build_susy_rep(cell.k, D);
  const Eigen::Matrix2cd q = restrict_to_cell(rep.Q, cell.m, cell.k, D);
  const Eigen::Matrix2cd qd = restrict_to_cell(rep.Q_dag, cell.m, cell.k, D);
  const Eigen::Matrix2cd sz = restrict_to_cell(rep.sigma_z, cell.m, cell.k, D);
  const Eigen::Matrix2cd eye = Eigen::Matrix2cd::Identity();
  const double c = static_cast<double>(cell.C);
  const double tolerance = 1e-12 * std::max(1.0, c);

  RelationReport report;
  auto add = [&](const std::string& name, const Eigen::Matrix2cd& gap) {
    const double r = gap.cwiseAbs().maxCoeff();
    report.checks.push_back(
        {name, r, tolerance, r <= tolerance, "restricted", {}});
  };
  add("[Q, Q_dag] = C sigma_z", q * qd - qd * q - c * sz);
  add("{Q, Q_dag} = C", q * qd + qd * q - c * eye);
  add("(Q_dag - Q)^2 = -C", (qd - q) * (qd - q) + c * eye);
  return report;
}

SusyPbHamiltonian susy_pb_hamiltonian(const QuasiAlgebraCell& cell,
                                      double Omega) {
  if (Omega <= 0.0) {
    throw DomainError("susy_pb_hamiltonian: require Omega > 0");
  }
  const int D = std::max(4 * cell.k + 8, cell.m + 2 * cell.k + 2);
  const SusyRep rep = build_susy_rep(cell.k, D);
  const Eigen::Matrix2cd q = restrict_to_cell(rep.Q, cell.m, cell.k, D);
  const Eigen::Matrix2cd qd = restrict_to_cell(rep.Q_dag, cell.m, cell.k, D);

  SusyPbHamiltonian h;
  h.energy = 0.5 * static_cast<double>(cell.C) * Omega;
  h.restricted_h = 0.5 * Omega * (q * qd + qd * q);
  return h;
}

}  // namespace pbosc
