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

#include "dephasim/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "dephasim/linalg.hpp"
#include "dephasim/operators.hpp"

namespace dephasim {

namespace {

// Eigenvalues of the partial transpose in (-kNegativityCut, 0) are treated as
// zero: round-off must not look like entanglement near a sudden-death crossing.
constexpr double kNegativityCut = 1e-12;

double skew_information_with_root(const Mat6& root, const Mat6& observable) {
  const Mat6 commutator = root * observable - observable * root;
  const double value = -0.5 * (commutator * commutator).trace().real();
  return std::max(value, 0.0);
}

}  // namespace

double negativity(const DensityMatrix& rho) {
  const Mat6 pt = partial_transpose_qubit(rho.matrix());
  Eigen::SelfAdjointEigenSolver<Mat6> solver(pt, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::ConvergenceFailure, "eigenvalue iteration did not converge");
  }
  double negative_sum = 0.0;
  for (int i = 0; i < kDim; ++i) {
    const double value = solver.eigenvalues()(i);
    if (value < -kNegativityCut) {
      negative_sum += -value;
    }
  }
  return std::min(2.0 * negative_sum, 1.0 + 1e-10);
}

double skew_information(const DensityMatrix& rho, const Mat6& observable) {
  const double defect = hermiticity_defect(observable);
  if (defect > 1e-12) {
    std::ostringstream oss;
    oss << "observable hermiticity defect " << defect << " exceeds 1e-12";
    throw Error(ErrorKind::NotHermitian, oss.str());
  }
  const Mat6 root = psd_sqrt(rho.matrix());
  return skew_information_with_root(root, observable);
}

RMat3 lqu_witness(const DensityMatrix& rho) {
  const Mat6 root = psd_sqrt(rho.matrix());
  std::array<Mat6, 3> sigma;
  for (int i = 0; i < 3; ++i) sigma[i] = qubit_operator(paulis()[i]);

  RMat3 r;
  for (int i = 0; i < 3; ++i) {
    const Mat6 left = root * sigma[i] * root;
    for (int j = 0; j < 3; ++j) {
      r(i, j) = (left * sigma[j]).trace().real();
    }
  }

  const double asym = (r - r.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-10) {
    std::ostringstream oss;
    oss << "witness asymmetry " << asym << " exceeds 1e-10";
    throw Error(ErrorKind::ConvergenceFailure, oss.str());
  }
  return ((r + r.transpose()) / 2.0).eval();
}

double lqu(const DensityMatrix& rho) {
  const RMat3 r = lqu_witness(rho);
  Eigen::SelfAdjointEigenSolver<RMat3> solver(r, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::ConvergenceFailure, "eigenvalue iteration did not converge");
  }
  const double raw = 1.0 - solver.eigenvalues().maxCoeff();
  if (raw < -1e-9) {
    std::ostringstream oss;
    oss << "raw value " << raw << " below -1e-9; input is not a valid state";
    throw Error(ErrorKind::NotPSD, oss.str());
  }
  return std::clamp(raw, 0.0, 1.0);
}

double lqu_bruteforce(const DensityMatrix& rho, int grid) {
  if (grid < 8) {
    std::ostringstream oss;
    oss << "grid = " << grid << " must be >= 8";
    throw Error(ErrorKind::ParamOutOfRange, oss.str());
  }
  const Mat6 root = psd_sqrt(rho.matrix());
  const double step = std::numbers::pi / grid;

  double best = std::numeric_limits<double>::infinity();
  for (int j = 0; j <= grid; ++j) {
    const double theta = j * step;
    const double st = std::sin(theta);
    const double ct = std::cos(theta);
    for (int k = 0; k < 2 * grid; ++k) {
      const double phi = k * step;
      const Mat2 direction = st * std::cos(phi) * pauli_x() +
                             st * std::sin(phi) * pauli_y() + ct * pauli_z();
      best = std::min(best,
                      skew_information_with_root(root, qubit_operator(direction)));
    }
  }
  return best;
}

}  // namespace dephasim
