#pragma once

#include <vector>

#include "pbosc/linalg.hpp"

namespace pbosc {

/// The s+1 orthonormal phase states on the uniform grid
/// theta_m = theta0 + 2 pi m / (s+1), and the Hermitian phase operator
/// phase_op = sum_m theta_m |theta_m><theta_m|.
struct PhaseBasis {
  int s = 0;
  double theta0 = 0.0;
  std::vector<double> thetas;
  CMatrix states;    // column m = phase state at theta_m
  CMatrix phase_op;  // Hermitian; spectrum = thetas
};

/// Component n of the phase state: exp(i n theta) / sqrt(s+1).
CVector phase_state(int s, double theta);

/// Build the full basis at cutoff s with reference phase theta0.
PhaseBasis build_phase_basis(int s, double theta0 = 0.0);

/// [phase_op, N] with N = diag(0..s). Anti-Hermitian, zero diagonal in the
/// number basis.
CMatrix number_phase_commutator(const PhaseBasis& basis);

/// p_m = |<theta_m|state>|^2. Probabilities below 1e-15 are clamped to 0.
/// Throws NormalizationError if the state is not unit-norm, DimensionError
/// on length mismatch.
std::vector<double> phase_distribution(const CVector& state,
                                       const PhaseBasis& basis,
                                       const Tolerance& tol = {});

}  // namespace pbosc
