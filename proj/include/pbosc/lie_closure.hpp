#pragma once

#include <string>
#include <vector>

#include "pbosc/linalg.hpp"
#include "pbosc/pb_operators.hpp"

namespace pbosc {

/// Orthonormal basis of a commutator-closed matrix Lie algebra.
///
/// Elements are stored in Hermitian form: traceless (when the generators
/// are), pairwise HS-orthogonal, unit HS norm. The real algebra is the span
/// of {i * basis[c]}; the commutator of two elements lies in that span.
struct LieBasis {
  int dim_space = 0;  // matrix size n
  std::vector<CMatrix> basis;
  std::vector<std::string> generated_from;  // provenance, one per element
  int closure_rounds = 0;

  int dimension() const { return static_cast<int>(basis.size()); }
};

/// Close the real Lie algebra generated by i*(Hermitian parts) and
/// (anti-Hermitian parts) of `generators` under the commutator bracket.
///
/// Breadth-first rounds of pairwise commutators, incremental Gram-Schmidt
/// against the current basis; a candidate is kept when its projection
/// residual exceeds tol_linear_independence * its own HS norm. Terminates
/// when a full round adds nothing. Deterministic: elements are ordered by
/// (round added, provenance).
///
/// Throws DimensionError on mixed sizes, DomainError on empty input or
/// max_rounds < 1, ClosureNotReached (carrying the dimension reached) if
/// max_rounds is exhausted while still growing.
LieBasis close_algebra(const std::vector<CMatrix>& generators,
                       const Tolerance& tol = {}, int max_rounds = 16);

/// Wrap already-Hermitian, pairwise HS-orthogonal matrices as a LieBasis
/// (normalizing each to unit HS norm). Throws DomainError if the elements
/// are not orthogonal or not Hermitian within tolerance.
LieBasis lie_basis_from_hermitian(const std::vector<CMatrix>& elements,
                                  const Tolerance& tol = {});

struct SuCertificateClause {
  std::string name;
  bool pass = false;
  double residual = 0.0;
  double tolerance = 0.0;
};

struct SuCertificate {
  int n = 0;
  int dimension = 0;
  std::vector<SuCertificateClause> clauses;
  bool pass = false;
};

/// Certify that `basis` spans su(n) in Hermitian form:
///   (i)   dimension == n^2 - 1,
///   (ii)  every element traceless,
///   (iii) every element Hermitian (the stored basis is the Hermitian
///         recombination witness),
///   (iv)  exp(i*H) unitary with unit determinant for each basis element and
///         a fixed set of random real combinations.
/// Returns the clause-by-clause certificate; throws CertificationFailure
/// naming the first failed clause.
SuCertificate certify_su(const LieBasis& basis);

/// Same checks as certify_su but always returns the full certificate instead
/// of throwing on failure.
SuCertificate certify_su_report(const LieBasis& basis);

/// Structure constants f[a][b][c] of the rescaled generators T_a = b_a/sqrt(2)
/// (so tr(T_a T_b) = delta_ab / 2), defined by [T_a, T_b] = i f_abc T_c.
struct StructureConstants {
  int dimension = 0;
  std::vector<double> f;  // flattened [a][b][c]
  bool antisymmetric = false;

  double at(int a, int b, int c) const {
    return f[static_cast<std::size_t>((a * dimension + b)) * dimension + c];
  }
  double& at(int a, int b, int c) {
    return f[static_cast<std::size_t>((a * dimension + b)) * dimension + c];
  }
};

/// Extract structure constants from a closed orthonormal basis.
/// Throws ClosureNotReached if some commutator leaves the span (residual
/// > 1e-8 relative).
StructureConstants structure_constants(const LieBasis& basis);

/// The eight Gell-Mann matrices assembled from the s=2 family:
///   l1 = a + a_dag + sqrt(2)(M + M_dag)     l2 = i(a_dag - a + sqrt(2)(M_dag - M))
///   l3 = A + 2K                             l4 = F + F_dag
///   l5 = i(F_dag - F)                       l6 = -(M + M_dag)
///   l7 = -i(M_dag - M)                      l8 = A / sqrt(3)
/// (l8 is the traceless diagonal completion orthogonal to l3 with
/// tr(l8^2) = 2.) Throws DomainError unless family.s == 2 with the ladder.
std::vector<CMatrix> gellmann_from_family(const OscillatorFamily& family);

/// The standard generalized Gell-Mann basis of su(n): symmetric pairs
/// E_jk + E_kj, antisymmetric pairs -i(E_jk - E_kj) for j < k, then diagonal
/// sqrt(2/(l(l+1))) * diag(1,..,1,-l,0,..) for l = 1..n-1. All Hermitian,
/// traceless, tr(L_a L_b) = 2 delta_ab. Throws DomainError for n < 2.
std::vector<CMatrix> generalized_gellmann(int n);

/// U = exp(i*G) for Hermitian traceless G; checks unitarity and unit
/// determinant (1e-9) before returning. Throws HermiticityError, TraceError,
/// or NumericError if the checks fail.
CMatrix group_element(const CMatrix& hermitian_combo, const Tolerance& tol = {});

}  // namespace pbosc
