#pragma once

#include <cstdint>
#include <vector>

#include "pbosc/linalg.hpp"
#include "pbosc/pb_operators.hpp"

namespace pbosc {

/// Exact integer binomial(n, k). Throws DomainError on negative input or
/// uint64 overflow.
std::uint64_t binomial(int n, int k);

/// Block operators of the supersymmetric sector at photon multiplicity k,
/// per-block truncation dimension D (so the oscillator blocks use cutoff
/// s = D-1). Layout: top block = atomic excited state (sigma_z = +1),
/// bottom = ground; sigma_+ maps bottom to top.
///
///   Q       = [[0, a^k/sqrt(k!)], [0, 0]]
///   Q_dag   = Q^dagger
///   N       = diag(a_dag a + k/2,  a a_dag - k/2)
///   Nprime  = diag(a^k a_dag^k / k!,  a_dag^k a^k / k!)
///
/// `window` (default D-k) is the boundary-safe subspace size per block:
/// inside it the truncated products agree with the untruncated algebra.
struct SusyRep {
  int k = 0;
  int D = 0;
  int window = 0;
  CMatrix N;
  CMatrix Nprime;
  CMatrix Q;
  CMatrix Q_dag;
  CMatrix sigma_z;
  CMatrix projector_W;  // 2D x 2D, keeps the first `window` states per block

  int total_dim() const { return 2 * D; }
};

/// Build the block representation. Throws DomainError unless D > k >= 1.
SusyRep build_susy_rep(int k, int D);

/// Residual report for every superalgebra relation:
///   Q^2 = 0, (Q_dag)^2 = 0, {Q, sigma_z} = 0, {Q_dag, sigma_z} = 0,
///   [Q, sigma_z] = -2Q, [Q_dag, sigma_z] = 2Q_dag          (full space)
///   [Q, Q_dag] = Nprime sigma_z, {Q, Q_dag} = Nprime,
///   [N, Q] = -Q, [N, Q_dag] = Q_dag, [N, Nprime] = 0,
///   (Q_dag - Q)^2 = -Nprime                                 (windowed)
/// Structural relations are checked on the full space with tolerance 0 and
/// additionally windowed; the rest are compressed onto the window with
/// projector_W on both sides, tolerance 1e-10.
RelationReport verify_susy_algebra(const SusyRep& rep, const Tolerance& tol = {});

/// Multiphoton Jaynes-Cummings parameters; the detuning is always derived.
struct JcParams {
  double omega = 1.0;   // mode frequency, > 0
  double omega0 = 1.0;  // transition frequency
  Complex g = 0.0;      // coupling
  int k = 1;            // photons per transition

  double delta() const { return k * omega - omega0; }
};

/// H = omega a_dag a + (omega0/2) sigma_z + g a_dag^k sigma_- + g* a^k sigma_+
/// assembled from truncated blocks of dimension D. Throws DomainError unless
/// D > k and omega > 0; HermiticityError if the result is not Hermitian.
CMatrix jc_hamiltonian_direct(const JcParams& p, int D);

/// The rewritten form
///   H = omega N + ((omega - delta)/2) sigma_z
///       + g sqrt(k!) Q_dag + g* sqrt(k!) Q - omega/2,
/// with N in its occupation-number form a_dag a + ((k-1)/2) sigma_z + 1/2.
/// With these choices the assembly agrees entrywise with
/// jc_hamiltonian_direct on the whole truncated space.
/// Throws DomainError on k mismatch between p and rep.
CMatrix jc_hamiltonian_susy_form(const JcParams& p, const SusyRep& rep);

/// A 2-dimensional invariant subspace label: the pair (|m> top, |m+k> bottom)
/// carries Nprime eigenvalue C = binomial(m+k, k), computed exactly.
struct QuasiAlgebraCell {
  int m = 0;
  int k = 1;
  std::uint64_t C = 1;
};

/// Validate (m, k) and compute C. Throws DomainError for m < 0 or k < 1.
QuasiAlgebraCell quasialgebra_cell(int m, int k);

struct NprimeCheck {
  int m = 0;
  int k = 0;
  std::uint64_t expected = 0;  // binomial(m+k, k)
  double top_residual = 0.0;
  double bottom_residual = 0.0;
  bool pass = false;
};

/// Apply Nprime to |m> embedded in the top block and |m+k> in the bottom
/// block; both must be eigenvectors with eigenvalue binomial(m+k, k) within
/// 1e-12. Requires the doubly-safe window m + k <= D - 1 - k, else
/// DomainError.
NprimeCheck nprime_eigen_check(int k, int m, int D);

/// Restrict Q, Q_dag, sigma_z to span{|m> top, |m+k> bottom} and verify the
/// three quasialgebra identities as 2x2 matrix equations:
///   [Q, Q_dag] = C sigma_z, {Q, Q_dag} = C, (Q_dag - Q)^2 = -C.
/// Requires the doubly-safe window, else DomainError.
RelationReport quasialgebra_check(const QuasiAlgebraCell& cell, int D);

struct SusyPbHamiltonian {
  double energy = 0.0;    // C * Omega / 2
  CMatrix restricted_h;   // 2x2; equals energy * I on the invariant subspace
};

/// H = (Omega/2) {Q, Q_dag} restricted to the cell's invariant subspace.
/// Throws DomainError for Omega <= 0.
SusyPbHamiltonian susy_pb_hamiltonian(const QuasiAlgebraCell& cell, double Omega);

}  // namespace pbosc
