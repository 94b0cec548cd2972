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

#include "dephasim/states.hpp"

#include <cmath>
#include <sstream>

#include "dephasim/linalg.hpp"
#include "dephasim/operators.hpp"

namespace dephasim {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

void require_range(double value, double lo, double hi, const char* name) {
  if (!(value >= lo && value <= hi)) {
    std::ostringstream oss;
    oss << name << " = " << value << " outside [" << lo << ", " << hi << "]";
    throw Error(ErrorKind::ParamOutOfRange, oss.str());
  }
}

Mat6 projector(const Vec6& v) {
  return v * v.adjoint();
}

}  // namespace

DensityMatrix validate(const Mat6& rho, const ValidationTolerances& tol) {
  if (!all_finite(rho)) {
    throw Error(ErrorKind::NotHermitian, "matrix has non-finite entries");
  }
  const double herm = hermiticity_defect(rho);
  if (herm > tol.hermiticity) {
    std::ostringstream oss;
    oss << "hermiticity defect " << herm << " exceeds " << tol.hermiticity;
    throw Error(ErrorKind::NotHermitian, oss.str());
  }
  const double trace_defect = std::abs(rho.trace() - Complex(1.0, 0.0));
  if (trace_defect > tol.trace) {
    std::ostringstream oss;
    oss << "|trace - 1| = " << trace_defect << " exceeds " << tol.trace;
    throw Error(ErrorKind::TraceNotOne, oss.str());
  }
  Eigen::SelfAdjointEigenSolver<Mat6> solver(rho, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::ConvergenceFailure, "eigenvalue iteration did not converge");
  }
  const double min_eig = solver.eigenvalues().minCoeff();
  if (min_eig < tol.eigenvalue_floor) {
    std::ostringstream oss;
    oss << "minimum eigenvalue " << min_eig << " below " << tol.eigenvalue_floor;
    throw Error(ErrorKind::NotPSD, oss.str());
  }
  return DensityMatrix(rho);
}

PureState::PureState(const Vec6& amplitudes) : amps_(amplitudes) {
  const double norm = amps_.norm();
  if (std::abs(norm - 1.0) > 1e-12) {
    std::ostringstream oss;
    oss << "state norm " << norm << " is not 1 within 1e-12";
    throw Error(ErrorKind::NotUnitVector, oss.str());
  }
}

DensityMatrix PureState::density() const {
  return validate(projector(amps_));
}

BellStates bell_states() {
  const Vec6 k00 = basis_ket(0, 0);
  const Vec6 k01 = basis_ket(0, 1);
  const Vec6 k10 = basis_ket(1, 0);
  const Vec6 k11 = basis_ket(1, 1);
  return {
      PureState(kInvSqrt2 * (k00 + k11)),
      PureState(kInvSqrt2 * (k00 - k11)),
      PureState(kInvSqrt2 * (k01 + k10)),
      PureState(kInvSqrt2 * (k01 - k10)),
  };
}

DensityMatrix rho_alpha_gamma(double alpha, double gamma) {
  require_range(alpha, 0.0, 0.5, "alpha");
  require_range(gamma, 0.0, 1.0, "gamma");
  const double beta = (1.0 - 2.0 * alpha - gamma) / 3.0;
  if (!(beta >= -1e-15 && beta <= 1.0 / 3.0 + 1e-15)) {
    std::ostringstream oss;
    oss << "derived beta = (1 - 2 alpha - gamma)/3 = " << beta
        << " outside [0, 1/3]";
    throw Error(ErrorKind::ParamOutOfRange, oss.str());
  }
  const BellStates bell = bell_states();
  Mat6 rho = alpha * (projector(basis_ket(0, 2)) + projector(basis_ket(1, 2)));
  rho += beta * (projector(bell.phi_plus.amplitudes()) +
                 projector(bell.phi_minus.amplitudes()) +
                 projector(bell.psi_plus.amplitudes()));
  rho += gamma * projector(bell.psi_minus.amplitudes());
  return validate(rho);
}

DensityMatrix isotropic(double alpha) {
  require_range(alpha, 0.0, 1.0, "alpha");
  const Vec6 psi1 = kInvSqrt2 * (basis_ket(0, 0) + basis_ket(1, 2));
  Mat6 rho = alpha * projector(psi1) + (1.0 - alpha) / 6.0 * Mat6::Identity();
  return validate(rho);
}

DensityMatrix rho_alpha_beta(double alpha, double beta) {
  require_range(alpha, 0.0, 1.0, "alpha");
  require_range(beta, 0.0, 1.0, "beta");
  const Vec6 psi3 = kInvSqrt2 * (basis_ket(0, 2) + basis_ket(1, 0));
  Mat6 rho = beta * projector(psi3) + (1.0 - beta) * isotropic(alpha).matrix();
  return validate(rho);
}

PureState schmidt_state(int kind, double alpha, SchmidtSign sign) {
  require_range(alpha, 0.0, 1.0, "alpha");
  // Product-basis index pairs for the two Schmidt terms of each kind.
  static constexpr int kPairs[6][2] = {
      {0, 5},  // |00>, |12>
      {0, 4},  // |00>, |11>
      {1, 5},  // |01>, |12>
      {1, 3},  // |01>, |10>
      {2, 3},  // |02>, |10>
      {2, 4},  // |02>, |11>
  };
  if (kind < 1 || kind > 6) {
    throw Error(ErrorKind::UnknownKind,
                "schmidt kind " + std::to_string(kind) + " outside 1..6");
  }
  const double beta = std::sqrt(1.0 - alpha * alpha);
  Vec6 v = Vec6::Zero();
  v(kPairs[kind - 1][0]) = alpha;
  v(kPairs[kind - 1][1]) = (sign == SchmidtSign::Plus) ? beta : -beta;
  return PureState(v);
}

PureState arbitrary_pure(const Mat2& u_qubit, const Mat3& u_qutrit, double alpha) {
  const double defect_a = (u_qubit.adjoint() * u_qubit - Mat2::Identity()).cwiseAbs().maxCoeff();
  const double defect_b = (u_qutrit.adjoint() * u_qutrit - Mat3::Identity()).cwiseAbs().maxCoeff();
  if (defect_a > 1e-12 || defect_b > 1e-12) {
    std::ostringstream oss;
    oss << "unitarity defect " << std::max(defect_a, defect_b) << " exceeds 1e-12";
    throw Error(ErrorKind::NotUnitary, oss.str());
  }
  require_range(alpha, 0.0, 1.0, "alpha");
  const Vec6 seed = alpha * basis_ket(0, 0) +
                    std::sqrt(1.0 - alpha * alpha) * basis_ket(1, 1);
  Vec6 out = Vec6::Zero();
  for (int i = 0; i < kQubitDim; ++i) {
    for (int a = 0; a < kQutritDim; ++a) {
      Complex acc = 0.0;
      for (int j = 0; j < kQubitDim; ++j) {
        for (int b = 0; b < kQutritDim; ++b) {
          acc += u_qubit(i, j) * u_qutrit(a, b) * seed(kQutritDim * j + b);
        }
      }
      out(kQutritDim * i + a) = acc;
    }
  }
  return PureState(out);
}

}  // namespace dephasim
