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

#include "support/oracles.hpp"

#include <cmath>
#include <numbers>

#include <unsupported/Eigen/KroneckerProduct>

#include "dephasim/operators.hpp"

namespace dephasim::testing {

Mat6 collective_matrix(const Orientation& n) {
  Mat2 qubit = Mat2::Zero();
  qubit(0, 0) = n.nz();
  qubit(1, 1) = -n.nz();
  qubit(0, 1) = Complex(n.nx(), -n.ny());
  qubit(1, 0) = Complex(n.nx(), n.ny());

  Mat6 g = Mat6::Zero();
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int a = 0; a < 3; ++a) {
        g(3 * i + a, 3 * j + a) += qubit(i, j);
      }
    }
  }
  for (int i = 0; i < 2; ++i) {
    g(3 * i + 0, 3 * i + 0) += 1.0;
    g(3 * i + 2, 3 * i + 2) += -1.0;
  }
  return g;
}

Mat36 double_commutator_superop(const Orientation& n) {
  const Mat6 g = collective_matrix(n);
  const Mat6 g2 = g * g;
  const Mat6 identity = Mat6::Identity();
  Mat36 l = Eigen::kroneckerProduct(g2, identity);
  l += Eigen::kroneckerProduct(identity, g2.transpose());
  l -= 2.0 * Eigen::kroneckerProduct(g, g.transpose());
  return Mat36(-0.25 * l);
}

namespace {

Mat36 fourth_order_step(const Mat36& h_l) {
  const Mat36 p2 = h_l * h_l;
  const Mat36 p3 = p2 * h_l;
  const Mat36 p4 = p3 * h_l;
  return Mat36(Mat36::Identity() + h_l + p2 / 2.0 + p3 / 6.0 + p4 / 24.0);
}

Mat36 repeated_square(Mat36 m, int times) {
  for (int i = 0; i < times; ++i) m = Mat36(m * m);
  return m;
}

}  // namespace

Mat36 rk4_propagator(const Orientation& n, double tau, double tol) {
  if (tau == 0.0) return Mat36::Identity();
  const Mat36 l = double_commutator_superop(n);

  auto propagator_at = [&](int k) {
    const double h = tau / std::pow(2.0, k);
    return repeated_square(fourth_order_step(Mat36(h * l)), k);
  };

  Mat36 previous = propagator_at(6);
  for (int k = 7; k <= 26; ++k) {
    Mat36 current = propagator_at(k);
    if (max_abs(current - previous) <= tol) {
      return current;
    }
    previous = std::move(current);
  }
  throw Error(ErrorKind::ConvergenceFailure,
              "step-halving integrator did not settle");
}

Mat6 rk4_evolve(const Mat6& rho0, const Orientation& n, double tau) {
  const Mat36 propagator = rk4_propagator(n, tau);
  Vec36 v;
  for (int j = 0; j < kDim; ++j)
    for (int k = 0; k < kDim; ++k) v(kDim * j + k) = rho0(j, k);
  v = propagator * v;
  Mat6 out;
  for (int j = 0; j < kDim; ++j)
    for (int k = 0; k < kDim; ++k) out(j, k) = v(kDim * j + k);
  return out;
}

double uniform_draw(std::mt19937_64& eng) {
  return (eng() >> 11) * 0x1.0p-53;
}

double gaussian_draw(std::mt19937_64& eng) {
  const double u1 = 1.0 - uniform_draw(eng);
  const double u2 = uniform_draw(eng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Eigen::MatrixXcd haar_unitary(int dim, std::mt19937_64& eng) {
  Eigen::MatrixXcd ginibre(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      ginibre(i, j) = Complex(gaussian_draw(eng), gaussian_draw(eng));
    }
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(ginibre);
  Eigen::MatrixXcd q = qr.householderQ();
  Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < dim; ++i) {
    const Complex d = r(i, i);
    q.col(i) *= (std::abs(d) > 0.0) ? d / std::abs(d) : Complex(1.0, 0.0);
  }
  return q;
}

Vec6 random_pure(std::mt19937_64& eng) {
  Vec6 v;
  for (int i = 0; i < kDim; ++i) {
    v(i) = Complex(gaussian_draw(eng), gaussian_draw(eng));
  }
  v /= v.norm();
  return v;
}

Mat6 random_density(std::mt19937_64& eng) {
  const int terms = 1 + static_cast<int>(eng() % 6);
  double weights[6];
  double total = 0.0;
  for (int i = 0; i < terms; ++i) {
    weights[i] = uniform_draw(eng) + 1e-9;
    total += weights[i];
  }
  Mat6 rho = Mat6::Zero();
  for (int i = 0; i < terms; ++i) {
    const Vec6 psi = random_pure(eng);
    rho += (weights[i] / total) * (psi * psi.adjoint());
  }
  return Mat6((rho + rho.adjoint()) / 2.0);
}

Mat6 random_hermitian(std::mt19937_64& eng) {
  Mat6 a;
  for (int i = 0; i < kDim; ++i) {
    for (int j = 0; j < kDim; ++j) {
      a(i, j) = Complex(gaussian_draw(eng), gaussian_draw(eng));
    }
  }
  return Mat6((a + a.adjoint()) / 2.0);
}

Orientation random_orientation(std::mt19937_64& eng) {
  while (true) {
    const double x = gaussian_draw(eng);
    const double y = gaussian_draw(eng);
    const double z = gaussian_draw(eng);
    if (x * x + y * y + z * z > 1e-12) {
      return Orientation::normalized(x, y, z);
    }
  }
}

double max_abs(const Eigen::MatrixXcd& m) {
  return m.cwiseAbs().maxCoeff();
}

}  // namespace dephasim::testing
