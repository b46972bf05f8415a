#include "pbosc/phase.hpp"

#include <cmath>
#include <numbers>

namespace pbosc {

CVector phase_state(int s, double theta) {
  if (s < 1) {
    throw DomainError("phase_state: require s >= 1, got " + std::to_string(s));
  }
  const int dim = s + 1;
  const double amp = 1.0 / std::sqrt(static_cast<double>(dim));
  CVector state(dim);
  for (int n = 0; n < dim; ++n) {
    state(n) = std::polar(amp, n * theta);
  }
  return state;
}

PhaseBasis build_phase_basis(int s, double theta0) {
  if (s < 1) {
    throw DomainError("build_phase_basis: require s >= 1, got " +
                      std::to_string(s));
  }
  const int dim = s + 1;
  PhaseBasis basis;
  basis.s = s;
  basis.theta0 = theta0;
  basis.thetas.resize(dim);
  basis.states.resize(dim, dim);
  for (int m = 0; m < dim; ++m) {
    basis.thetas[m] = theta0 + 2.0 * std::numbers::pi * m / dim;
    basis.states.col(m) = phase_state(s, basis.thetas[m]);
  }
  basis.phase_op = CMatrix::Zero(dim, dim);
  for (int m = 0; m < dim; ++m) {
    basis.phase_op +=
        basis.thetas[m] * basis.states.col(m) * basis.states.col(m).adjoint();
  }
  return basis;
}

CMatrix number_phase_commutator(const PhaseBasis& basis) {
  const int dim = basis.s + 1;
  CMatrix number = CMatrix::Zero(dim, dim);
  for (int n = 0; n < dim; ++n) number(n, n) = static_cast<double>(n);
  return commutator(basis.phase_op, number);
}

std::vector<double> phase_distribution(const CVector& state,
                                       const PhaseBasis& basis,
                                       const Tolerance& tol) {
  const int dim = basis.s + 1;
  if (state.size() != dim) {
    throw DimensionError("phase_distribution: state length " +
                         std::to_string(state.size()) + " != " +
                         std::to_string(dim));
  }
  const double norm = state.norm();
  if (std::abs(norm - 1.0) > std::max(tol.abs_tol, tol.rel_tol)) {
    throw NormalizationError("phase_distribution: state norm " +
                             std::to_string(norm) + " != 1");
  }
  std::vector<double> probs(dim);
  for (int m = 0; m < dim; ++m) {
    const Complex overlap = basis.states.col(m).dot(state);
    double p = std::norm(overlap);
    if (p < 1e-15) p = 0.0;  // suppress sign noise in reports
    probs[m] = p;
  }
  return probs;
}

}  // namespace pbosc
