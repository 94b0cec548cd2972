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

#include <cmath>
#include <functional>

#include "dephasim/operators.hpp"
#include "dephasim/states.hpp"
#include "support/oracles.hpp"

using namespace dephasim;
namespace dt = dephasim::testing;

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440;

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::InvalidArgument;
}
}  // namespace

TEST_CASE("bell state amplitudes") {
  const BellStates bell = bell_states();

  Vec6 phi_plus = Vec6::Zero();
  phi_plus(0) = kInvSqrt2;
  phi_plus(4) = kInvSqrt2;
  CHECK(dt::max_abs(bell.phi_plus.amplitudes() - phi_plus) == 0.0);

  Vec6 psi_minus = Vec6::Zero();
  psi_minus(1) = kInvSqrt2;
  psi_minus(3) = -kInvSqrt2;
  CHECK(dt::max_abs(bell.psi_minus.amplitudes() - psi_minus) == 0.0);

  for (const PureState* state :
       {&bell.phi_plus, &bell.phi_minus, &bell.psi_plus, &bell.psi_minus}) {
    CHECK(state->amplitudes().norm() == doctest::Approx(1.0).epsilon(1e-15));
  }
}

TEST_CASE("alpha-gamma family satisfies the trace condition") {
  const DensityMatrix rho = rho_alpha_gamma(0.1, 0.5);
  CHECK(std::abs(rho.matrix().trace().real() - 1.0) <= 1e-14);
  // beta = (1 - 2*0.1 - 0.5)/3 = 0.1 shows up directly in the |02> population.
  CHECK(rho.matrix()(2, 2).real() == doctest::Approx(0.1).epsilon(1e-14));
  CHECK(rho.matrix()(0, 0).real() == doctest::Approx(0.1).epsilon(1e-14));

  for (double alpha : {0.0, 0.15, 0.37, 0.5}) {
    for (double gamma : {0.0, 0.2, 0.8}) {
      const double beta = (1.0 - 2.0 * alpha - gamma) / 3.0;
      if (beta < 0.0 || beta > 1.0 / 3.0) continue;
      const DensityMatrix state = rho_alpha_gamma(alpha, gamma);
      CHECK(std::abs(2.0 * alpha + 3.0 * beta + gamma - 1.0) <= 1e-14);
      CHECK(std::abs(state.matrix().trace().real() - 1.0) <= 1e-14);
    }
  }
}

TEST_CASE("alpha-gamma degenerate corners") {
  const BellStates bell = bell_states();
  const Mat6 psi_minus =
      bell.psi_minus.amplitudes() * bell.psi_minus.amplitudes().adjoint();
  CHECK(dt::max_abs(rho_alpha_gamma(0.0, 1.0).matrix() - psi_minus) <= 1e-15);

  const Mat6 edge = rho_alpha_gamma(0.5, 0.0).matrix();
  CHECK(edge(2, 2).real() == doctest::Approx(0.5));
  CHECK(edge(5, 5).real() == doctest::Approx(0.5));
  CHECK(dt::max_abs(edge - Mat6(edge.diagonal().asDiagonal())) == 0.0);
}

TEST_CASE("alpha-gamma rejects out-of-range parameters by name") {
  CHECK(kind_of([] { rho_alpha_gamma(0.6, 0.1); }) == ErrorKind::ParamOutOfRange);
  CHECK(kind_of([] { rho_alpha_gamma(0.1, 1.2); }) == ErrorKind::ParamOutOfRange);
  // alpha and gamma both legal but the derived beta is negative
  CHECK_THROWS_WITH_AS(rho_alpha_gamma(0.4, 0.9), doctest::Contains("beta"), Error);
}

TEST_CASE("isotropic family endpoints") {
  CHECK(dt::max_abs(isotropic(0.0).matrix() - Mat6::Identity() / 6.0) == 0.0);

  const Vec6 psi1 = (basis_ket(0, 0) + basis_ket(1, 2)) / std::sqrt(2.0);
  CHECK(dt::max_abs(isotropic(1.0).matrix() - psi1 * psi1.adjoint()) <= 1e-15);

  CHECK(kind_of([] { isotropic(-0.1); }) == ErrorKind::ParamOutOfRange);
  CHECK(kind_of([] { isotropic(1.1); }) == ErrorKind::ParamOutOfRange);
}

TEST_CASE("alpha-beta family composition") {
  for (double alpha : {0.0, 0.4, 1.0}) {
    CHECK(dt::max_abs(rho_alpha_beta(alpha, 0.0).matrix() -
                      isotropic(alpha).matrix()) == 0.0);
  }
  const Vec6 psi3 = (basis_ket(0, 2) + basis_ket(1, 0)) / std::sqrt(2.0);
  CHECK(dt::max_abs(rho_alpha_beta(0.0, 1.0).matrix() - psi3 * psi3.adjoint()) <=
        1e-15);
  CHECK(std::abs(rho_alpha_beta(0.4, 0.7).matrix().trace().real() - 1.0) <= 1e-14);
}

TEST_CASE("schmidt states: known specializations") {
  const Vec6 psi1 = (basis_ket(0, 0) + basis_ket(1, 2)) / std::sqrt(2.0);
  CHECK(dt::max_abs(schmidt_state(1, kInvSqrt2).amplitudes() - psi1) <= 1e-15);

  const Vec6 psi3 = (basis_ket(0, 2) + basis_ket(1, 0)) / std::sqrt(2.0);
  CHECK(dt::max_abs(schmidt_state(5, kInvSqrt2).amplitudes() - psi3) <= 1e-15);

  // Schmidt rank one: alpha = 1 collapses to the first product ket.
  CHECK(dt::max_abs(schmidt_state(4, 1.0).amplitudes() - basis_ket(0, 1)) == 0.0);

  const Vec6 minus = schmidt_state(2, 0.6, SchmidtSign::Minus).amplitudes();
  CHECK(minus(0).real() == doctest::Approx(0.6));
  CHECK(minus(4).real() == doctest::Approx(-0.8));

  CHECK(kind_of([] { schmidt_state(0, 0.5); }) == ErrorKind::UnknownKind);
  CHECK(kind_of([] { schmidt_state(7, 0.5); }) == ErrorKind::UnknownKind);
  CHECK(kind_of([] { schmidt_state(1, 1.5); }) == ErrorKind::ParamOutOfRange);
}

TEST_CASE("arbitrary pure states from local unitaries") {
  const Mat2 id2 = Mat2::Identity();
  const Mat3 id3 = Mat3::Identity();

  CHECK(dt::max_abs(arbitrary_pure(id2, id3, 1.0).amplitudes() - basis_ket(0, 0)) == 0.0);

  const Vec6 phi_plus = (basis_ket(0, 0) + basis_ket(1, 1)) / std::sqrt(2.0);
  CHECK(dt::max_abs(arbitrary_pure(id2, id3, kInvSqrt2).amplitudes() - phi_plus) <=
        1e-15);

  // Relabeling qutrit levels 1 <-> 2 turns |11> into |12>.
  Mat3 swap12 = Mat3::Zero();
  swap12(0, 0) = 1.0;
  swap12(1, 2) = 1.0;
  swap12(2, 1) = 1.0;
  const Vec6 psi1 = (basis_ket(0, 0) + basis_ket(1, 2)) / std::sqrt(2.0);
  CHECK(dt::max_abs(arbitrary_pure(id2, swap12, kInvSqrt2).amplitudes() - psi1) <=
        1e-15);

  Mat2 not_unitary = Mat2::Identity() * 1.5;
  CHECK(kind_of([&] { arbitrary_pure(not_unitary, id3, 0.5); }) == ErrorKind::NotUnitary);
}

TEST_CASE("validate reports the first violated invariant") {
  CHECK_NOTHROW(validate(Mat6::Identity() / 6.0));

  Mat6 two_trace = Mat6::Zero();
  two_trace(0, 0) = 1.0;
  two_trace(1, 1) = 1.0;
  CHECK(kind_of([&] { validate(two_trace); }) == ErrorKind::TraceNotOne);

  Mat6 negative = Mat6::Identity() * 0.22;
  negative(5, 5) = -0.1;  // trace still one, spectrum not
  CHECK(kind_of([&] { validate(negative); }) == ErrorKind::NotPSD);

  Mat6 skew = Mat6::Identity() / 6.0;
  skew(0, 1) = Complex(0.0, 0.1);
  CHECK(kind_of([&] { validate(skew); }) == ErrorKind::NotHermitian);
}

TEST_CASE("every constructor output passes validation") {
  std::mt19937_64 eng(23);
  for (int trial = 0; trial < 10; ++trial) {
    const double a = dt::uniform_draw(eng);
    CHECK_NOTHROW(isotropic(a));
    CHECK_NOTHROW(rho_alpha_beta(a, dt::uniform_draw(eng)));
    const int kind = 1 + static_cast<int>(eng() % 6);
    CHECK_NOTHROW(schmidt_state(kind, a).density());
    const Eigen::MatrixXcd ua = dt::haar_unitary(2, eng);
    const Eigen::MatrixXcd ub = dt::haar_unitary(3, eng);
    CHECK_NOTHROW(arbitrary_pure(Mat2(ua), Mat3(ub), a).density());
  }
}
