#include "pbosc/linalg.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <sstream>

namespace pbosc {

namespace {

void require_same_dim(const CMatrix& x, const CMatrix& y, const char* op) {
  if (x.rows() != x.cols() || y.rows() != y.cols() || x.rows() != y.rows()) {
    std::ostringstream msg;
    msg << op << ": dimension mismatch (" << x.rows() << "x" << x.cols()
        << " vs " << y.rows() << "x" << y.cols() << ")";
    throw DimensionError(msg.str());
  }
}

}  // namespace

double max_abs(const CMatrix& x) {
  return x.size() == 0 ? 0.0 : x.cwiseAbs().maxCoeff();
}

bool approx_equal(const CMatrix& x, const CMatrix& y, double tol) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) return false;
  return max_abs(x - y) <= tol;
}

CMatrix commutator(const CMatrix& x, const CMatrix& y) {
  require_same_dim(x, y, "commutator");
  return x * y - y * x;
}

CMatrix anticommutator(const CMatrix& x, const CMatrix& y) {
  require_same_dim(x, y, "anticommutator");
  return x * y + y * x;
}

Complex hs_inner(const CMatrix& x, const CMatrix& y) {
  require_same_dim(x, y, "hs_inner");
  return x.conjugate().cwiseProduct(y).sum();
}

double hs_norm(const CMatrix& x) { return x.norm(); }

Eigensystem hermitian_eigensystem(const CMatrix& x, const Tolerance& tol) {
  if (x.rows() != x.cols()) {
    throw DimensionError("hermitian_eigensystem: matrix not square");
  }
  const double asym = max_abs(x - x.adjoint());
  const double bound = std::max(tol.abs_tol, tol.rel_tol * max_abs(x));
  if (asym > bound) {
    std::ostringstream msg;
    msg << "hermitian_eigensystem: max asymmetry " << asym
        << " exceeds tolerance " << bound;
    throw HermiticityError(msg.str(), asym);
  }

  Eigen::SelfAdjointEigenSolver<CMatrix> solver(0.5 * (x + x.adjoint()));
  if (solver.info() != Eigen::Success) {
    throw NumericError("hermitian_eigensystem: eigensolver failed to converge");
  }

  Eigensystem sys{solver.eigenvalues(), solver.eigenvectors()};

  // Fix each column's phase: first nonzero component real-positive.
  const Eigen::Index n = sys.eigenvectors.rows();
  for (Eigen::Index j = 0; j < sys.eigenvectors.cols(); ++j) {
    const double col_max = sys.eigenvectors.col(j).cwiseAbs().maxCoeff();
    for (Eigen::Index i = 0; i < n; ++i) {
      const Complex v = sys.eigenvectors(i, j);
      if (std::abs(v) > 1e-12 * col_max) {
        sys.eigenvectors.col(j) *= std::conj(v) / std::abs(v);
        break;
      }
    }
  }
  return sys;
}

CMatrix matrix_exponential(const CMatrix& x) {
  if (x.rows() != x.cols()) {
    throw DimensionError("matrix_exponential: matrix not square");
  }
  if (!x.allFinite()) {
    throw NumericError("matrix_exponential: non-finite entries");
  }
  return x.exp();
}

}  // namespace pbosc
