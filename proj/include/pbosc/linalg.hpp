#pragma once

#include <Eigen/Dense>
#include <complex>

#include "pbosc/errors.hpp"

namespace pbosc {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Absolute/relative tolerance pair used by all verification routines.
struct Tolerance {
  double abs_tol = 1e-12;
  double rel_tol = 1e-9;
};

/// Max-abs-entry norm; the norm behind every tolerance in this library.
double max_abs(const CMatrix& x);

/// Entrywise comparison: max-abs difference <= tol.
bool approx_equal(const CMatrix& x, const CMatrix& y, double tol);

/// XY - YX. Throws DimensionError on size mismatch.
CMatrix commutator(const CMatrix& x, const CMatrix& y);

/// XY + YX. Throws DimensionError on size mismatch.
CMatrix anticommutator(const CMatrix& x, const CMatrix& y);

/// Hilbert-Schmidt inner product tr(X^dag Y); conjugate-symmetric in (X, Y).
Complex hs_inner(const CMatrix& x, const CMatrix& y);

/// HS norm sqrt(tr(X^dag X)).
double hs_norm(const CMatrix& x);

struct Eigensystem {
  Eigen::VectorXd eigenvalues;  // ascending
  CMatrix eigenvectors;         // orthonormal columns, matching order
};

/// Spectral decomposition of a Hermitian matrix.
///
/// Deterministic output: eigenvalues ascending, each eigenvector's first
/// nonzero component made real-positive. Throws HermiticityError (carrying
/// the max asymmetry) if X deviates from X^dag beyond tolerance.
Eigensystem hermitian_eigensystem(const CMatrix& x, const Tolerance& tol = {});

/// exp(X) for any square matrix (Pade scaling-and-squaring).
/// Throws NumericError on non-finite entries.
CMatrix matrix_exponential(const CMatrix& x);

}  // namespace pbosc
