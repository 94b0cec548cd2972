// Copyright 2026 dephasim contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dephasim/linalg.hpp"
#include "dephasim/operators.hpp"
#include "support/oracles.hpp"

using namespace dephasim;
namespace dt = dephasim::testing;

TEST_CASE("eigendecomposition of the identity") {
  const HermitianEigenSystem sys = hermitian_eigendecompose(Mat6::Identity());
  for (int i = 0; i < kDim; ++i) {
    CHECK(sys.eigenvalues(i) == doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("eigendecomposition sorts a diagonal spectrum ascending") {
  Mat6 m = Mat6::Zero();
  const double d[kDim] = {2, 1, 0, 0, -1, -2};
  for (int i = 0; i < kDim; ++i) m(i, i) = d[i];
  const HermitianEigenSystem sys = hermitian_eigendecompose(m);
  const double expected[kDim] = {-2, -1, 0, 0, 1, 2};
  for (int i = 0; i < kDim; ++i) {
    CHECK(sys.eigenvalues(i) == doctest::Approx(expected[i]).epsilon(1e-14));
  }
}

TEST_CASE("eigendecomposition reconstructs random Hermitian input") {
  std::mt19937_64 eng(101);
  for (int trial = 0; trial < 50; ++trial) {
    const Mat6 m = dt::random_hermitian(eng);
    const HermitianEigenSystem sys = hermitian_eigendecompose(m, 1e-12);
    const Eigen::MatrixXcd rebuilt = sys.eigenvectors *
                                     sys.eigenvalues.asDiagonal() *
                                     sys.eigenvectors.adjoint();
    CHECK(dt::max_abs(rebuilt - m) <= 1e-12);
    CHECK(dt::max_abs(sys.eigenvectors.adjoint() * sys.eigenvectors -
                      Eigen::MatrixXcd::Identity(kDim, kDim)) <= 1e-12);
    for (int i = 1; i < kDim; ++i) {
      CHECK(sys.eigenvalues(i) >= sys.eigenvalues(i - 1));
    }
  }
}

TEST_CASE("eigendecomposition rejects non-Hermitian input") {
  Mat6 m = Mat6::Zero();
  m(0, 1) = 1.0;  // no matching (1,0) entry
  CHECK_THROWS_WITH_AS(hermitian_eigendecompose(m), doctest::Contains("hermiticity"),
                       Error);
  try {
    hermitian_eigendecompose(m);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotHermitian);
  }
}

TEST_CASE("psd_sqrt of scalar matrices and projectors") {
  const Eigen::MatrixXcd root = psd_sqrt(Mat6::Identity() / 6.0);
  CHECK(dt::max_abs(root - Mat6::Identity() / std::sqrt(6.0)) <= 1e-14);

  std::mt19937_64 eng(7);
  const Vec6 psi = dt::random_pure(eng);
  const Mat6 projector = psi * psi.adjoint();
  const Eigen::MatrixXcd projector_root = psd_sqrt(projector);
  CHECK(dt::max_abs(projector_root - projector) <= 1e-12);
  CHECK(dt::max_abs(projector_root * projector_root - projector) <= 1e-10);
}

TEST_CASE("psd_sqrt squares back to the input") {
  std::mt19937_64 eng(11);
  for (int trial = 0; trial < 25; ++trial) {
    const Mat6 rho = dt::random_density(eng);
    const Eigen::MatrixXcd root = psd_sqrt(rho);
    CHECK(dt::max_abs(root * root - rho) <= 1e-10);
    CHECK(hermiticity_defect(root) <= 1e-12);
    const HermitianEigenSystem sys = hermitian_eigendecompose(root, 1e-12);
    CHECK(sys.eigenvalues.minCoeff() >= -1e-12);
  }
}

TEST_CASE("psd_sqrt clamps harmless negatives and rejects real ones") {
  Mat6 nearly = Mat6::Identity() / 6.0;
  nearly(5, 5) = -5e-11;
  const Eigen::MatrixXcd root = psd_sqrt(nearly);
  CHECK(std::abs(root(5, 5)) <= 1e-12);  // clamped to zero before rooting

  Mat6 bad = Mat6::Identity() / 6.0;
  bad(5, 5) = -2e-10;
  CHECK_THROWS_AS(psd_sqrt(bad), Error);
  try {
    psd_sqrt(bad);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotPSD);
  }
}

TEST_CASE("partial transpose leaves diagonal matrices alone and is an involution") {
  Mat6 diag = Mat6::Zero();
  for (int i = 0; i < kDim; ++i) diag(i, i) = (i + 1) / 21.0;
  CHECK(dt::max_abs(partial_transpose_qubit(diag) - diag) == 0.0);

  std::mt19937_64 eng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const Mat6 rho = dt::random_density(eng);
    const Mat6 pt = partial_transpose_qubit(rho);
    CHECK(dt::max_abs(partial_transpose_qubit(pt) - rho) == 0.0);
    CHECK(std::abs((pt.trace() - rho.trace())) <= 1e-15);
    CHECK(hermiticity_defect(pt) <= 1e-14);
  }
}

TEST_CASE("partial transpose spectrum of a Schmidt pair") {
  // (|00> + |12>)/sqrt(2): partial transposition swaps the coherence into an
  // off-diagonal block whose spectrum is {1/2, 1/2, 1/2, -1/2, 0, 0}.
  Vec6 psi = (basis_ket(0, 0) + basis_ket(1, 2)) / std::sqrt(2.0);
  const Mat6 pt = partial_transpose_qubit(psi * psi.adjoint());
  const HermitianEigenSystem sys = hermitian_eigendecompose(pt, 1e-12);
  const double expected[kDim] = {-0.5, 0.0, 0.0, 0.5, 0.5, 0.5};
  for (int i = 0; i < kDim; ++i) {
    CHECK(sys.eigenvalues(i) == doctest::Approx(expected[i]).epsilon(1e-12));
  }
}

TEST_CASE("partial trace of product states recovers the factors") {
  Mat2 a;
  a << 0.7, Complex(0.1, 0.05), Complex(0.1, -0.05), 0.3;
  Mat3 b = Mat3::Zero();
  b(0, 0) = 0.5;
  b(1, 1) = 0.3;
  b(2, 2) = 0.2;
  b(0, 2) = Complex(0.05, 0.02);
  b(2, 0) = std::conj(b(0, 2));

  Mat6 rho;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      rho.block<3, 3>(3 * i, 3 * j) = a(i, j) * b;

  CHECK(dt::max_abs(partial_trace(rho, Subsystem::Qubit) - a) <= 1e-15);
  CHECK(dt::max_abs(partial_trace(rho, Subsystem::Qutrit) - b) <= 1e-15);
}

TEST_CASE("partial trace marginals: Schmidt state and maximally mixed") {
  Vec6 psi = (basis_ket(0, 0) + basis_ket(1, 2)) / std::sqrt(2.0);
  const Eigen::MatrixXcd qubit = partial_trace(psi * psi.adjoint(), Subsystem::Qubit);
  CHECK(dt::max_abs(qubit - Mat2::Identity() / 2.0) <= 1e-15);

  const Eigen::MatrixXcd qutrit = partial_trace(Mat6::Identity() / 6.0, Subsystem::Qutrit);
  CHECK(dt::max_abs(qutrit - Mat3::Identity() / 3.0) <= 1e-15);
}

TEST_CASE("partial trace preserves trace and positivity") {
  std::mt19937_64 eng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const Mat6 rho = dt::random_density(eng);
    for (Subsystem keep : {Subsystem::Qubit, Subsystem::Qutrit}) {
      const Eigen::MatrixXcd marginal = partial_trace(rho, keep);
      CHECK(std::abs(marginal.trace() - rho.trace()) <= 1e-14);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(marginal,
                                                             Eigen::EigenvaluesOnly);
      CHECK(solver.eigenvalues().minCoeff() >= -1e-14);
    }
  }
}

TEST_CASE("trace distance basics") {
  std::mt19937_64 eng(19);
  const Mat6 rho = dt::random_density(eng);
  CHECK(trace_distance(rho, rho) == 0.0);

  const Mat6 e0 = basis_ket(0) * basis_ket(0).adjoint();
  const Mat6 e1 = basis_ket(1) * basis_ket(1).adjoint();
  CHECK(trace_distance(e0, e1) == doctest::Approx(1.0).epsilon(1e-14));

  // |00><00| vs I/6: the difference has eigenvalues 5/6 and -1/6 (x5).
  CHECK(trace_distance(e0, Mat6::Identity() / 6.0) ==
        doctest::Approx(5.0 / 6.0).epsilon(1e-14));
}

TEST_CASE("trace distance rejects mismatched dimensions") {
  Eigen::MatrixXcd small = Eigen::MatrixXcd::Identity(3, 3);
  Eigen::MatrixXcd big = Eigen::MatrixXcd::Identity(6, 6);
  CHECK_THROWS_AS(trace_distance(small, big), Error);
  try {
    trace_distance(small, big);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DimensionMismatch);
  }
}
