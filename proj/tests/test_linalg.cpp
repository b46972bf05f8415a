#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "pbosc/linalg.hpp"
#include "pbosc/pb_operators.hpp"
#include "pbosc/susy.hpp"
#include "test_support.hpp"

using namespace pbosc;
using pbosc::testing::make_matrix;
using pbosc::testing::random_hermitian;
using pbosc::testing::random_matrix;
using pbosc::testing::random_traceless_hermitian;

namespace {

constexpr Complex I{0.0, 1.0};

// Trace of X^dag Y by explicit index loops; the hand-expansion oracle for
// hs_inner.
Complex loop_trace_inner(const CMatrix& x, const CMatrix& y) {
  Complex sum = 0.0;
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
      sum += std::conj(x(i, j)) * y(i, j);
    }
  }
  return sum;
}

}  // namespace

TEST_CASE("commutator reproduces the displayed identities") {
  const OscillatorFamily f1 = build_family(1);
  const CMatrix expected1 = make_matrix({{1.0, 0.0}, {0.0, -1.0}});
  CHECK(max_abs(commutator(f1.a, f1.a_dag) - expected1) <= 1e-15);

  const OscillatorFamily f2 = build_family(2);
  CMatrix expected2 = CMatrix::Zero(3, 3);
  expected2(1, 2) = -3.0 * std::sqrt(2.0);
  CHECK(max_abs(commutator(f2.a, f2.A) - expected2) <= 1e-14);
  CHECK(max_abs(commutator(f2.a, f2.A) -
                3.0 * std::sqrt(2.0) * f2.derived.at("M")) <= 1e-14);

  std::mt19937 rng(1);
  const CMatrix r = random_matrix(rng, 4);
  CHECK(max_abs(commutator(CMatrix::Identity(4, 4), r)) == 0.0);
}

TEST_CASE("commutator and anticommutator reject mismatched dimensions") {
  const CMatrix a = CMatrix::Zero(2, 2);
  const CMatrix b = CMatrix::Zero(3, 3);
  CHECK_THROWS_AS(commutator(a, b), DimensionError);
  CHECK_THROWS_AS(anticommutator(a, b), DimensionError);
  CHECK_THROWS_AS(hs_inner(a, b), DimensionError);
}

TEST_CASE("anticommutator examples") {
  const OscillatorFamily f1 = build_family(1);
  CHECK(max_abs(anticommutator(f1.a, f1.a_dag) - CMatrix::Identity(2, 2)) <=
        1e-15);

  std::mt19937 rng(2);
  const CMatrix r = random_matrix(rng, 3);
  CHECK(max_abs(anticommutator(CMatrix::Zero(3, 3), r)) == 0.0);

  const SusyRep rep = build_susy_rep(1, 4);
  CHECK(max_abs(anticommutator(rep.Q, rep.sigma_z)) == 0.0);
}

TEST_CASE("hs_inner agrees with the hand-expansion oracle on Gell-Mann entries") {
  const CMatrix lambda1 =
      make_matrix({{0, 1, 0}, {1, 0, 0}, {0, 0, 0}});
  const CMatrix lambda2 =
      make_matrix({{0, -I, 0}, {I, 0, 0}, {0, 0, 0}});

  CHECK(loop_trace_inner(lambda1, lambda1) == Complex(2.0, 0.0));
  CHECK(loop_trace_inner(lambda1, lambda2) == Complex(0.0, 0.0));
  CHECK(std::abs(hs_inner(lambda1, lambda1) - Complex(2.0, 0.0)) <= 1e-15);
  CHECK(std::abs(hs_inner(lambda1, lambda2)) <= 1e-15);

  for (int n = 1; n <= 5; ++n) {
    const CMatrix eye = CMatrix::Identity(n, n);
    CHECK(std::abs(hs_inner(eye, eye) - Complex(n, 0.0)) <= 1e-15);
  }
}

TEST_CASE("hs_inner is conjugate-symmetric") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const CMatrix x = random_matrix(rng, 4);
    const CMatrix y = random_matrix(rng, 4);
    CHECK(std::abs(hs_inner(x, y) - std::conj(hs_inner(y, x))) <= 1e-12);
  }
}

TEST_CASE("hermitian_eigensystem on fixed spectra") {
  CMatrix diag = CMatrix::Zero(3, 3);
  diag(0, 0) = 1.0;
  diag(1, 1) = 1.0;
  diag(2, 2) = -2.0;
  const Eigensystem sys = hermitian_eigensystem(diag);
  CHECK(sys.eigenvalues(0) == doctest::Approx(-2.0).epsilon(1e-14));
  CHECK(sys.eigenvalues(1) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(sys.eigenvalues(2) == doctest::Approx(1.0).epsilon(1e-14));

  const Eigensystem zero_sys = hermitian_eigensystem(CMatrix::Zero(4, 4));
  CHECK(zero_sys.eigenvalues.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("hermitian_eigensystem on the Nprime top block matches the binomial oracle") {
  const int k = 2;
  const int D = 6;
  const SusyRep rep = build_susy_rep(k, D);
  const int window = D - k;
  const CMatrix top =
      rep.Nprime.topLeftCorner(D, D).topLeftCorner(window, window);
  const Eigensystem sys = hermitian_eigensystem(top);
  // Safe-window eigenvalues are binomial(m+k, k) for m = 0..window-1.
  std::vector<double> expected;
  for (int m = 0; m < window; ++m) {
    expected.push_back(static_cast<double>(binomial(m + k, k)));
  }
  std::sort(expected.begin(), expected.end());
  for (int i = 0; i < window; ++i) {
    CHECK(sys.eigenvalues(i) == doctest::Approx(expected[i]).epsilon(1e-12));
  }
}

TEST_CASE("hermitian_eigensystem rejects non-Hermitian input") {
  CMatrix x = CMatrix::Zero(2, 2);
  x(0, 1) = 1.0;
  CHECK_THROWS_AS(hermitian_eigensystem(x), HermiticityError);
  try {
    hermitian_eigensystem(x);
  } catch (const HermiticityError& e) {
    CHECK(e.max_asymmetry == doctest::Approx(1.0));
  }
}

TEST_CASE("hermitian_eigensystem reconstructs and is deterministic") {
  std::mt19937 rng(4);
  for (int n : {2, 3, 5, 8}) {
    const CMatrix x = random_hermitian(rng, n);
    const Eigensystem sys = hermitian_eigensystem(x);
    const CMatrix recon = sys.eigenvectors *
                          sys.eigenvalues.cast<Complex>().asDiagonal() *
                          sys.eigenvectors.adjoint();
    CHECK(max_abs(x - recon) <= 1e-8 * max_abs(x));
    CHECK(max_abs(sys.eigenvectors.adjoint() * sys.eigenvectors -
                  CMatrix::Identity(n, n)) <= 1e-9);

    // Phase convention: first nonzero component of each column real-positive.
    for (int j = 0; j < n; ++j) {
      const double col_max = sys.eigenvectors.col(j).cwiseAbs().maxCoeff();
      for (int i = 0; i < n; ++i) {
        const Complex v = sys.eigenvectors(i, j);
        if (std::abs(v) > 1e-12 * col_max) {
          CHECK(v.real() > 0.0);
          CHECK(std::abs(v.imag()) <= 1e-12 * std::abs(v.real()));
          break;
        }
      }
    }

    const Eigensystem again = hermitian_eigensystem(x);
    CHECK(max_abs(sys.eigenvectors - again.eigenvectors) == 0.0);
  }
}

TEST_CASE("matrix_exponential closed forms") {
  CHECK(max_abs(matrix_exponential(CMatrix::Zero(3, 3)) -
                CMatrix::Identity(3, 3)) <= 1e-15);

  CMatrix x = CMatrix::Zero(2, 2);
  x(0, 0) = I * std::numbers::pi / 2.0;
  x(1, 1) = -I * std::numbers::pi / 2.0;
  const CMatrix expected = make_matrix({{I, 0.0}, {0.0, -I}});
  CHECK(max_abs(matrix_exponential(x) - expected) <= 1e-14);

  const CMatrix lambda1 = make_matrix({{0, 1, 0}, {1, 0, 0}, {0, 0, 0}});
  const CMatrix u = matrix_exponential(I * lambda1);
  CHECK(std::abs(u.determinant() - 1.0) <= 1e-9);
}

TEST_CASE("matrix_exponential rejects non-finite input") {
  CMatrix x = CMatrix::Zero(2, 2);
  x(0, 0) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(matrix_exponential(x), NumericError);
}

TEST_CASE("property: commutators are traceless") {
  std::mt19937 rng(5);
  const Tolerance tol;
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + trial % 5;
    const CMatrix x = random_matrix(rng, n);
    const CMatrix y = random_matrix(rng, n);
    CHECK(std::abs(commutator(x, y).trace()) <= tol.abs_tol * n);
  }
}

TEST_CASE("property: Jacobi identity") {
  std::mt19937 rng(6);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 4;
    const CMatrix x = random_matrix(rng, n);
    const CMatrix y = random_matrix(rng, n);
    const CMatrix z = random_matrix(rng, n);
    const CMatrix jacobi = commutator(x, commutator(y, z)) +
                           commutator(y, commutator(z, x)) +
                           commutator(z, commutator(x, y));
    CHECK(max_abs(jacobi) <= 1e-10 * max_abs(x) * max_abs(y) * max_abs(z));
  }
}

TEST_CASE("property: exp of traceless anti-Hermitian input is special unitary") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 2 + trial % 4;
    const CMatrix h = random_traceless_hermitian(rng, n);
    const CMatrix u = matrix_exponential(I * h);
    CHECK(max_abs(u.adjoint() * u - CMatrix::Identity(n, n)) <= 1e-9);
    CHECK(std::abs(u.determinant() - 1.0) <= 1e-9);
  }
}
