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

#ifndef DEPHASIM_STATES_HPP
#define DEPHASIM_STATES_HPP

#include "dephasim/types.hpp"

namespace dephasim {

struct ValidationTolerances {
  double hermiticity = 1e-12;
  double trace = 1e-12;
  double eigenvalue_floor = -1e-10;
};

/// A 6x6 density matrix that has passed validation: Hermitian, unit trace,
/// and positive semidefinite within the stated tolerances. Immutable.
class DensityMatrix {
 public:
  const Mat6& matrix() const noexcept { return m_; }

  friend DensityMatrix validate(const Mat6& rho, const ValidationTolerances& tol);

 private:
  explicit DensityMatrix(Mat6 m) : m_(std::move(m)) {}
  Mat6 m_;
};

/// Check all three density-matrix invariants; the thrown error names the
/// first violated one and carries the measured defect.
DensityMatrix validate(const Mat6& rho, const ValidationTolerances& tol = {});

/// Unit-norm 6-component state vector.
class PureState {
 public:
  /// Throws NotUnitVector when |norm - 1| exceeds 1e-12.
  explicit PureState(const Vec6& amplitudes);

  const Vec6& amplitudes() const noexcept { return amps_; }
  DensityMatrix density() const;

 private:
  Vec6 amps_;
};

struct BellStates {
  PureState phi_plus;   // (|00> + |11>) / sqrt(2)
  PureState phi_minus;  // (|00> - |11>) / sqrt(2)
  PureState psi_plus;   // (|01> + |10>) / sqrt(2)
  PureState psi_minus;  // (|01> - |10>) / sqrt(2)
};

/// The four Bell states of the qubit x {first two qutrit levels} subspace,
/// embedded in the six-dimensional joint basis.
BellStates bell_states();

/// Two-parameter family
///   rho = alpha(|02><02| + |12><12|)
///       + beta(|phi+><phi+| + |phi-><phi-| + |psi+><psi+|)
///       + gamma |psi-><psi-|,
/// with beta = (1 - 2*alpha - gamma)/3 fixed by the unit-trace condition
/// 2*alpha + 3*beta + gamma = 1. Requires 0 <= alpha <= 1/2, 0 <= gamma <= 1
/// and the derived beta in [0, 1/3]; rejects out-of-range parameters rather
/// than clamping them.
DensityMatrix rho_alpha_gamma(double alpha, double gamma);

/// Isotropic family alpha |psi1><psi1| + (1-alpha)/6 I with
/// |psi1> = (|00> + |12>)/sqrt(2); entangled exactly for alpha > 1/4.
DensityMatrix isotropic(double alpha);

/// Mixture beta |psi3><psi3| + (1-beta) isotropic(alpha) with
/// |psi3> = (|02> + |10>)/sqrt(2).
///
/// |psi3> spans the subspace left invariant by z-oriented collective
/// dephasing, which is what makes this family's entanglement time-invariant
/// for the z field direction.
DensityMatrix rho_alpha_beta(double alpha, double beta);

enum class SchmidtSign { Plus, Minus };

/// Schmidt-form pure states alpha|a0 b0> +- beta|a1 b1| with
/// beta = sqrt(1 - alpha^2) and product-basis pairs
///   kind 1: |00>, |12>     kind 2: |00>, |11>     kind 3: |01>, |12>
///   kind 4: |01>, |10>     kind 5: |02>, |10>     kind 6: |02>, |11>.
PureState schmidt_state(int kind, double alpha, SchmidtSign sign = SchmidtSign::Plus);

/// (U_A (x) U_B)(alpha|00> + sqrt(1-alpha^2)|11>): the generic pure state up
/// to choice of local Schmidt bases. Both factors must be unitary to 1e-12.
PureState arbitrary_pure(const Mat2& u_qubit, const Mat3& u_qutrit, double alpha);

}  // namespace dephasim

#endif  // DEPHASIM_STATES_HPP
