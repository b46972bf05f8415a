#include "pbosc/lie_closure.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace pbosc {

namespace {

constexpr double kIndependenceThreshold = 1e-8;  // relative to candidate norm
constexpr Complex kImag{0.0, 1.0};

// Incremental Gram-Schmidt over the real span of anti-Hermitian matrices.
// Returns true if `candidate` carried a new independent direction.
bool absorb(std::vector<CMatrix>& basis, std::vector<std::string>& provenance,
            const CMatrix& candidate, const std::string& origin) {
  const double cand_norm = hs_norm(candidate);
  if (cand_norm == 0.0) return false;

  CMatrix residual = candidate;
  // Two projection passes keep orthogonality at the 1e-10 level.
  for (int pass = 0; pass < 2; ++pass) {
    for (const CMatrix& b : basis) {
      residual -= hs_inner(b, residual).real() * b;
    }
  }
  const double res_norm = hs_norm(residual);
  if (res_norm <= kIndependenceThreshold * cand_norm) return false;

  basis.push_back(residual / res_norm);
  provenance.push_back(origin);
  return true;
}

}  // namespace

LieBasis close_algebra(const std::vector<CMatrix>& generators,
                       const Tolerance& tol, int max_rounds) {
  if (generators.empty()) {
    throw DomainError("close_algebra: no generators");
  }
  if (max_rounds < 1) {
    throw DomainError("close_algebra: max_rounds must be >= 1");
  }
  const Eigen::Index n = generators.front().rows();
  for (const CMatrix& g : generators) {
    if (g.rows() != g.cols() || g.rows() != n) {
      throw DimensionError("close_algebra: generators must be square and of equal size");
    }
  }

  // Work over anti-Hermitian representatives: i*(Hermitian part) and the
  // anti-Hermitian part of each generator seed the algebra.
  std::vector<CMatrix> basis;
  std::vector<std::string> provenance;
  for (std::size_t gi = 0; gi < generators.size(); ++gi) {
    const CMatrix& g = generators[gi];
    const CMatrix herm = 0.5 * (g + g.adjoint());
    const CMatrix anti = 0.5 * (g - g.adjoint());
    if (hs_norm(herm) > tol.abs_tol) {
      absorb(basis, provenance, kImag * herm,
             "round0:i*herm(g" + std::to_string(gi) + ")");
    }
    if (hs_norm(anti) > tol.abs_tol) {
      absorb(basis, provenance, anti,
             "round0:antiherm(g" + std::to_string(gi) + ")");
    }
  }
  if (basis.empty()) {
    throw DomainError("close_algebra: all generators are zero");
  }

  int rounds = 0;
  std::size_t frontier_begin = 0;
  const std::size_t max_dim = static_cast<std::size_t>(n) * n;
  while (true) {
    if (rounds >= max_rounds) {
      throw ClosureNotReached(
          "close_algebra: not closed after " + std::to_string(max_rounds) +
              " rounds (dimension " + std::to_string(basis.size()) + ")",
          static_cast<int>(basis.size()));
    }
    ++rounds;
    const std::size_t frontier_end = basis.size();
    bool grew = false;
    // Pair every frontier element against the whole basis, including
    // elements appended earlier in the same round.
    for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
      for (std::size_t j = 0; j < basis.size() && basis.size() < max_dim; ++j) {
        if (i == j) continue;
        const CMatrix bracket = commutator(basis[i], basis[j]);
        grew |= absorb(basis, provenance, bracket,
                       "round" + std::to_string(rounds) + ":[b" +
                           std::to_string(i) + ",b" + std::to_string(j) + "]");
      }
    }
    frontier_begin = frontier_end;
    if (!grew) break;
  }

  LieBasis out;
  out.dim_space = static_cast<int>(n);
  out.closure_rounds = rounds;
  out.generated_from = std::move(provenance);
  out.basis.reserve(basis.size());
  for (const CMatrix& k : basis) {
    out.basis.push_back(-kImag * k);  // Hermitian form, HS norm preserved
  }
  return out;
}

LieBasis lie_basis_from_hermitian(const std::vector<CMatrix>& elements,
                                  const Tolerance& tol) {
  if (elements.empty()) {
    throw DomainError("lie_basis_from_hermitian: no elements");
  }
  LieBasis out;
  out.dim_space = static_cast<int>(elements.front().rows());
  out.closure_rounds = 0;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const CMatrix& e = elements[i];
    if (e.rows() != e.cols() || e.rows() != out.dim_space) {
      throw DimensionError("lie_basis_from_hermitian: elements must be square and of equal size");
    }
    const double scale = std::max(1.0, max_abs(e));
    if (max_abs(e - e.adjoint()) > std::max(tol.abs_tol, tol.rel_tol * scale)) {
      throw DomainError("lie_basis_from_hermitian: element " +
                        std::to_string(i) + " is not Hermitian");
    }
    const double norm = hs_norm(e);
    if (norm == 0.0) {
      throw DomainError("lie_basis_from_hermitian: element " +
                        std::to_string(i) + " is zero");
    }
    out.basis.push_back(e / norm);
    out.generated_from.push_back("given:e" + std::to_string(i));
  }
  for (std::size_t i = 0; i < out.basis.size(); ++i) {
    for (std::size_t j = i + 1; j < out.basis.size(); ++j) {
      if (std::abs(hs_inner(out.basis[i], out.basis[j])) > 1e-10) {
        throw DomainError("lie_basis_from_hermitian: elements " +
                          std::to_string(i) + " and " + std::to_string(j) +
                          " are not HS-orthogonal");
      }
    }
  }
  return out;
}

SuCertificate certify_su_report(const LieBasis& basis) {
  SuCertificate cert;
  cert.n = basis.dim_space;
  cert.dimension = basis.dimension();
  const int expected = cert.n * cert.n - 1;

  auto clause = [&](const std::string& name, bool pass, double residual,
                    double tolerance) {
    cert.clauses.push_back({name, pass, residual, tolerance});
  };

  clause("dimension", cert.dimension == expected,
         std::abs(static_cast<double>(cert.dimension - expected)), 0.0);

  double max_trace = 0.0;
  for (const CMatrix& b : basis.basis) {
    max_trace = std::max(max_trace, std::abs(b.trace()));
  }
  clause("traceless", max_trace <= 1e-10, max_trace, 1e-10);

  double max_asym = 0.0;
  for (const CMatrix& b : basis.basis) {
    max_asym = std::max(max_asym, max_abs(b - b.adjoint()));
  }
  clause("hermitian-recombination", max_asym <= 1e-10, max_asym, 1e-10);

  // Group elements: exp(i H) for every basis element and a fixed batch of
  // random real combinations must be unitary with unit determinant.
  double max_unitarity = 0.0;
  double max_det = 0.0;
  auto probe = [&](const CMatrix& h) {
    const CMatrix u = matrix_exponential(kImag * h);
    const CMatrix eye = CMatrix::Identity(u.rows(), u.cols());
    max_unitarity = std::max(max_unitarity, max_abs(u.adjoint() * u - eye));
    max_det = std::max(max_det, std::abs(u.determinant() - 1.0));
  };
  for (const CMatrix& b : basis.basis) probe(b);
  std::mt19937 rng(20240815);
  std::normal_distribution<double> coeff(0.0, 1.0);
  for (int trial = 0; trial < 5; ++trial) {
    CMatrix h = CMatrix::Zero(cert.n, cert.n);
    for (const CMatrix& b : basis.basis) h += coeff(rng) * b;
    probe(h);
  }
  clause("group-element", max_unitarity <= 1e-9 && max_det <= 1e-9,
         std::max(max_unitarity, max_det), 1e-9);

  cert.pass = true;
  for (const auto& c : cert.clauses) cert.pass = cert.pass && c.pass;
  return cert;
}

SuCertificate certify_su(const LieBasis& basis) {
  SuCertificate cert = certify_su_report(basis);
  if (!cert.pass) {
    for (const auto& c : cert.clauses) {
      if (!c.pass) {
        std::ostringstream msg;
        msg << "certify_su: clause '" << c.name << "' failed (residual "
            << c.residual << ")";
        throw CertificationFailure(msg.str(), c.name);
      }
    }
  }
  return cert;
}

StructureConstants structure_constants(const LieBasis& basis) {
  const int d = basis.dimension();
  StructureConstants sc;
  sc.dimension = d;
  sc.f.assign(static_cast<std::size_t>(d) * d * d, 0.0);

  // With unit-HS-norm elements b_a, [b_a, b_b] = i f~_abc b_c; rescaling to
  // T_a = b_a / sqrt(2) (tr(T_a T_b) = delta_ab / 2) gives f = f~ / sqrt(2).
  const double rescale = 1.0 / std::sqrt(2.0);
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      if (a == b) continue;
      const CMatrix bracket_h = -kImag * commutator(basis.basis[a], basis.basis[b]);
      CMatrix residual = bracket_h;
      for (int c = 0; c < d; ++c) {
        const Complex coef = hs_inner(basis.basis[c], bracket_h);
        if (std::abs(coef.imag()) > 1e-8 * std::max(1.0, hs_norm(bracket_h))) {
          throw ClosureNotReached(
              "structure_constants: complex expansion coefficient at (" +
                  std::to_string(a) + "," + std::to_string(b) + "," +
                  std::to_string(c) + ")",
              d);
        }
        sc.at(a, b, c) = coef.real() * rescale;
        residual -= coef.real() * basis.basis[c];
      }
      const double rel = hs_norm(residual) / std::max(1.0, hs_norm(bracket_h));
      if (rel > 1e-8) {
        throw ClosureNotReached(
            "structure_constants: commutator [" + std::to_string(a) + "," +
                std::to_string(b) + "] leaves the span (residual " +
                std::to_string(rel) + ")",
            d);
      }
    }
  }
  sc.antisymmetric = true;
  for (int a = 0; a < d && sc.antisymmetric; ++a) {
    for (int b = 0; b < d && sc.antisymmetric; ++b) {
      for (int c = 0; c < d; ++c) {
        if (std::abs(sc.at(a, b, c) + sc.at(b, a, c)) > 1e-9) {
          sc.antisymmetric = false;
          break;
        }
      }
    }
  }
  return sc;
}

std::vector<CMatrix> gellmann_from_family(const OscillatorFamily& family) {
  if (family.s != 2 || !family.has_ladder()) {
    throw DomainError("gellmann_from_family: requires the s=2 family with its ladder");
  }
  const CMatrix& a = family.a;
  const CMatrix& ad = family.a_dag;
  const CMatrix& A = family.A;
  const CMatrix& M = family.derived.at("M");
  const CMatrix& Md = family.derived.at("M_dag");
  const CMatrix& K = family.derived.at("K");
  const CMatrix& F = family.derived.at("F");
  const CMatrix& Fd = family.derived.at("F_dag");
  const double rt2 = std::sqrt(2.0);

  std::vector<CMatrix> lambdas;
  lambdas.reserve(8);
  lambdas.push_back(a + ad + rt2 * (M + Md));
  lambdas.push_back(kImag * (ad - a + rt2 * (Md - M)));
  lambdas.push_back(A + 2.0 * K);
  lambdas.push_back(F + Fd);
  lambdas.push_back(kImag * (Fd - F));
  lambdas.push_back(-(M + Md));
  lambdas.push_back(-kImag * (Md - M));
  lambdas.push_back(A / std::sqrt(3.0));
  return lambdas;
}

std::vector<CMatrix> generalized_gellmann(int n) {
  if (n < 2) {
    throw DomainError("generalized_gellmann: require n >= 2, got " +
                      std::to_string(n));
  }
  std::vector<CMatrix> out;
  out.reserve(static_cast<std::size_t>(n) * n - 1);
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      CMatrix sym = CMatrix::Zero(n, n);
      sym(j, k) = 1.0;
      sym(k, j) = 1.0;
      out.push_back(std::move(sym));
    }
  }
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      CMatrix antisym = CMatrix::Zero(n, n);
      antisym(j, k) = -kImag;
      antisym(k, j) = kImag;
      out.push_back(std::move(antisym));
    }
  }
  for (int l = 1; l < n; ++l) {
    CMatrix diag = CMatrix::Zero(n, n);
    const double scale = std::sqrt(2.0 / (l * (l + 1.0)));
    for (int i = 0; i < l; ++i) diag(i, i) = scale;
    diag(l, l) = -l * scale;
    out.push_back(std::move(diag));
  }
  return out;
}

CMatrix group_element(const CMatrix& hermitian_combo, const Tolerance& tol) {
  if (hermitian_combo.rows() != hermitian_combo.cols()) {
    throw DimensionError("group_element: matrix not square");
  }
  const double scale = std::max(1.0, max_abs(hermitian_combo));
  const double asym = max_abs(hermitian_combo - hermitian_combo.adjoint());
  if (asym > std::max(tol.abs_tol, tol.rel_tol * scale)) {
    throw HermiticityError("group_element: input not Hermitian (asymmetry " +
                               std::to_string(asym) + ")",
                           asym);
  }
  const double trace = std::abs(hermitian_combo.trace());
  const double n = static_cast<double>(hermitian_combo.rows());
  if (trace > std::max(tol.abs_tol, tol.rel_tol * scale) * n) {
    throw TraceError("group_element: input not traceless (|tr| = " +
                     std::to_string(trace) + ")");
  }
  const CMatrix u = matrix_exponential(kImag * hermitian_combo);
  const CMatrix eye = CMatrix::Identity(u.rows(), u.cols());
  const double unitarity = max_abs(u.adjoint() * u - eye);
  const double det_gap = std::abs(u.determinant() - 1.0);
  if (unitarity > 1e-9 || det_gap > 1e-9) {
    std::ostringstream msg;
    msg << "group_element: exp(iG) failed the group checks (||U^dag U - I|| = "
        << unitarity << ", |det U - 1| = " << det_gap << ")";
    throw NumericError(msg.str());
  }
  return u;
}

}  // namespace pbosc
