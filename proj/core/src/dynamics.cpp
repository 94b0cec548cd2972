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

#include "dephasim/dynamics.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include "dephasim/correlations.hpp"
#include "dephasim/linalg.hpp"
#include "dephasim/operators.hpp"

namespace dephasim {

namespace {

constexpr double kUnitNormTol = 1e-12;
constexpr double kSpectrumSnapTol = 1e-10;

Mat6 fold_hermitian(const Mat6& m) {
  return ((m + m.adjoint()) / 2.0).eval();
}

void require_nonnegative_time(double tau) {
  if (!(tau >= 0.0)) {
    std::ostringstream oss;
    oss << "tau = " << tau << " must be >= 0";
    throw Error(ErrorKind::NegativeTime, oss.str());
  }
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// One Gaussian per trajectory from a counter-based stream: two splitmix64
// words feed an explicit Box-Muller transform. The draw is a pure function of
// (seed, counter), so results cannot depend on evaluation order, and the
// stream does not depend on the standard library's normal_distribution
// implementation.
double counter_gaussian(std::uint64_t seed, std::uint64_t counter) {
  const std::uint64_t base =
      splitmix64(seed ^ (0x9e3779b97f4a7c15ULL * (counter + 1)));
  const double u1 = 1.0 - (splitmix64(base) >> 11) * 0x1.0p-53;               // (0, 1]
  const double u2 = (splitmix64(base ^ 0xda942042e4dd58b5ULL) >> 11) * 0x1.0p-53;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace

Orientation::Orientation(double nx, double ny, double nz) : n_(nx, ny, nz) {
  const double defect = std::abs(n_.squaredNorm() - 1.0);
  if (defect > kUnitNormTol) {
    std::ostringstream oss;
    oss << "(" << nx << ", " << ny << ", " << nz << ") has |n|^2 - 1 = " << defect
        << ", not a unit vector within " << kUnitNormTol;
    throw Error(ErrorKind::NotUnitVector, oss.str());
  }
}

Orientation Orientation::normalized(double nx, double ny, double nz) {
  const double norm = std::sqrt(nx * nx + ny * ny + nz * nz);
  if (!(norm > 1e-12)) {
    throw Error(ErrorKind::NotUnitVector, "cannot normalize a (near-)zero vector");
  }
  return Orientation(nx / norm, ny / norm, nz / norm);
}

CollectiveOperator collective_operator(const Orientation& n) {
  Mat2 qubit_part = n.nx() * pauli_x() + n.ny() * pauli_y() + n.nz() * pauli_z();
  Mat6 g = qubit_operator(qubit_part) + qutrit_operator(qutrit_sz());

  HermitianEigenSystem sys = hermitian_eigendecompose(g, 1e-10);

  // The exact spectrum is {-2,-1,0,0,1,2} for every unit n; snap to it so the
  // degenerate pair is exactly degenerate downstream.
  static constexpr double kExpected[kDim] = {-2.0, -1.0, 0.0, 0.0, 1.0, 2.0};
  RVec6 snapped;
  for (int i = 0; i < kDim; ++i) {
    const double defect = std::abs(sys.eigenvalues(i) - kExpected[i]);
    if (defect > kSpectrumSnapTol) {
      std::ostringstream oss;
      oss << "collective-operator eigenvalue " << sys.eigenvalues(i)
          << " is not within " << kSpectrumSnapTol << " of " << kExpected[i];
      throw Error(ErrorKind::ConvergenceFailure, oss.str());
    }
    snapped(i) = kExpected[i];
  }
  return {n, std::move(g), snapped, Mat6(sys.eigenvectors)};
}

Generator build_generator(const Orientation& n) {
  const Mat6 identity = Mat6::Identity();
  std::array<Mat6, 3> s;
  for (int i = 0; i < 3; ++i) s[i] = qubit_operator(paulis()[i]);
  const Mat6 b = qutrit_operator(qutrit_sz());
  const Eigen::Vector3d nv = n.vector();

  Mat36 sum = Mat36::Zero();

  // Qubit group: sum_ij n_i n_j (S_i S_j rho + rho S_i S_j - 2 S_i rho S_j).
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const Mat6 sij = s[i] * s[j];
      sum += nv(i) * nv(j) *
             (Eigen::kroneckerProduct(sij, identity) +
              Eigen::kroneckerProduct(identity, sij.transpose()) -
              2.0 * Eigen::kroneckerProduct(s[i], s[j].transpose()))
                 .eval();
    }
  }

  // Cross group: -2 sum_j n_j (S_j rho B + B rho S_j - (1/2){{S_j, B}, rho}).
  for (int j = 0; j < 3; ++j) {
    const Mat6 anti = s[j] * b + b * s[j];
    sum -= 2.0 * nv(j) *
           (Eigen::kroneckerProduct(s[j], b.transpose()) +
            Eigen::kroneckerProduct(b, s[j].transpose()) -
            0.5 * (Eigen::kroneckerProduct(anti, identity) +
                   Eigen::kroneckerProduct(identity, anti.transpose())))
               .eval();
  }

  // Qutrit group: {B^2, rho} - 2 B rho B.
  const Mat6 b2 = b * b;
  sum += (Eigen::kroneckerProduct(b2, identity) +
          Eigen::kroneckerProduct(identity, b2.transpose()) -
          2.0 * Eigen::kroneckerProduct(b, b.transpose()))
             .eval();

  return {n, Mat36(-0.25 * sum)};
}

Vec36 vectorize(const Mat6& m) {
  Vec36 v;
  for (int j = 0; j < kDim; ++j) {
    for (int k = 0; k < kDim; ++k) {
      v(kDim * j + k) = m(j, k);
    }
  }
  return v;
}

Mat6 devectorize(const Vec36& v) {
  Mat6 m;
  for (int j = 0; j < kDim; ++j) {
    for (int k = 0; k < kDim; ++k) {
      m(j, k) = v(kDim * j + k);
    }
  }
  return m;
}

DensityMatrix evolve_exact(const DensityMatrix& rho0, const CollectiveOperator& op,
                           double tau) {
  require_nonnegative_time(tau);
  if (tau == 0.0) {
    return rho0;
  }
  const Mat6& v = op.eigenvectors;
  Mat6 in_eigenbasis = v.adjoint() * rho0.matrix() * v;
  for (int a = 0; a < kDim; ++a) {
    for (int b = 0; b < kDim; ++b) {
      const double gap = op.eigenvalues(a) - op.eigenvalues(b);
      if (gap != 0.0) {
        in_eigenbasis(a, b) *= std::exp(-tau * gap * gap / 4.0);
      }
    }
  }
  Mat6 out = v * in_eigenbasis * v.adjoint();
  return validate(fold_hermitian(out));
}

DensityMatrix evolve_exact(const DensityMatrix& rho0, const Orientation& n, double tau) {
  return evolve_exact(rho0, collective_operator(n), tau);
}

DensityMatrix evolve_superop(const DensityMatrix& rho0, const Orientation& n, double tau) {
  require_nonnegative_time(tau);
  if (tau == 0.0) {
    return rho0;
  }
  const Generator gen = build_generator(n);
  const Mat36 propagator = (tau * gen.matrix).exp();
  Mat6 out = devectorize(propagator * vectorize(rho0.matrix()));
  return validate(fold_hermitian(out));
}

DensityMatrix asymptotic_state(const DensityMatrix& rho0, const CollectiveOperator& op) {
  const Mat6& v = op.eigenvectors;
  Mat6 in_eigenbasis = v.adjoint() * rho0.matrix() * v;
  for (int a = 0; a < kDim; ++a) {
    for (int b = 0; b < kDim; ++b) {
      if (op.eigenvalues(a) != op.eigenvalues(b)) {
        in_eigenbasis(a, b) = 0.0;
      }
    }
  }
  Mat6 out = v * in_eigenbasis * v.adjoint();
  return validate(fold_hermitian(out));
}

DensityMatrix asymptotic_state(const DensityMatrix& rho0, const Orientation& n) {
  return asymptotic_state(rho0, collective_operator(n));
}

DensityMatrix stochastic_unfold(const DensityMatrix& rho0, const Orientation& n,
                                double tau, std::int64_t trajectories,
                                std::uint64_t seed) {
  require_nonnegative_time(tau);
  if (trajectories < 1) {
    std::ostringstream oss;
    oss << "trajectories = " << trajectories << " must be >= 1";
    throw Error(ErrorKind::ParamOutOfRange, oss.str());
  }
  if (tau == 0.0) {
    return rho0;  // the phase variance is tau/2, so every draw is the identity
  }

  const CollectiveOperator op = collective_operator(n);
  const Mat6& v = op.eigenvectors;
  const Mat6 in_eigenbasis = v.adjoint() * rho0.matrix() * v;

  // theta ~ N(0, tau/2) reproduces exp(-tau gap^2 / 4) on ensemble average.
  const double sigma = std::sqrt(tau / 2.0);

  Mat6 acc = Mat6::Zero();
  for (std::int64_t k = 0; k < trajectories; ++k) {
    const double theta =
        sigma * counter_gaussian(seed, static_cast<std::uint64_t>(k));

    Complex phase[kDim];
    for (int a = 0; a < kDim; ++a) {
      phase[a] = std::exp(Complex(0.0, -theta * op.eigenvalues(a)));
    }
    for (int a = 0; a < kDim; ++a) {
      for (int b = 0; b < kDim; ++b) {
        acc(a, b) += in_eigenbasis(a, b) * phase[a] * std::conj(phase[b]);
      }
    }
  }
  acc /= static_cast<double>(trajectories);

  Mat6 out = v * acc * v.adjoint();
  return validate(fold_hermitian(out));
}

Trajectory sample_trajectory(const DensityMatrix& rho0, const Orientation& n,
                             double tau_max, int steps) {
  if (!(tau_max > 0.0)) {
    std::ostringstream oss;
    oss << "tau_max = " << tau_max << " must be > 0";
    throw Error(ErrorKind::ParamOutOfRange, oss.str());
  }
  if (steps < 2) {
    std::ostringstream oss;
    oss << "steps = " << steps << " must be >= 2";
    throw Error(ErrorKind::ParamOutOfRange, oss.str());
  }

  const CollectiveOperator op = collective_operator(n);
  Trajectory out{n, {}, {}, {}, {}};
  out.times.reserve(steps);
  out.states.reserve(steps);
  out.negativity.reserve(steps);
  out.lqu.reserve(steps);
  for (int i = 0; i < steps; ++i) {
    const double tau = tau_max * static_cast<double>(i) / (steps - 1);
    DensityMatrix state = evolve_exact(rho0, op, tau);
    out.times.push_back(tau);
    out.negativity.push_back(negativity(state));
    out.lqu.push_back(lqu(state));
    out.states.push_back(std::move(state));
  }
  return out;
}

}  // namespace dephasim
