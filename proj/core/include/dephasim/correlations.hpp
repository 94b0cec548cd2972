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

#ifndef DEPHASIM_CORRELATIONS_HPP
#define DEPHASIM_CORRELATIONS_HPP

#include "dephasim/states.hpp"
#include "dephasim/types.hpp"

namespace dephasim {

/// Entanglement negativity: twice the absolute sum of the negative
/// eigenvalues of the qubit-side partial transpose, normalized to [0, 1].
/// Zero exactly characterizes separability in 2x3. Eigenvalues in
/// (-1e-12, 0) count as zero so round-off cannot fake entanglement near a
/// sudden-death crossing.
double negativity(const DensityMatrix& rho);

/// Wigner-Yanase skew information -(1/2) Tr([sqrt(rho), M]^2) of a Hermitian
/// observable M. Non-negative; zero when rho and M commute.
double skew_information(const DensityMatrix& rho, const Mat6& observable);

/// The 3x3 real symmetric witness matrix with entries
/// r_ij = Tr{ sqrt(rho) (sigma_i (x) I) sqrt(rho) (sigma_j (x) I) }.
/// Symmetrized as (R + R^T)/2 after checking the raw asymmetry is below
/// 1e-10.
RMat3 lqu_witness(const DensityMatrix& rho);

/// Local quantum uncertainty for the qubit side: the closed form
/// 1 - lambda_max(lqu_witness(rho)), clamped to [0, 1]. The raw value must
/// not fall below -1e-9. Vanishes on product states; equals 1 on maximally
/// entangled pure states.
double lqu(const DensityMatrix& rho);

/// Direct minimization of the skew information over local qubit observables
/// m . sigma (x) I for unit Bloch vectors m on a (theta, phi) grid with
/// spacing pi/grid in both angles (theta in [0, pi], phi in [0, 2 pi)).
///
/// Upper-bounds lqu for every grid and converges to it under refinement;
/// doubling `grid` yields a nested point set, so the result is monotone
/// non-increasing along that sequence. Requires grid >= 8.
double lqu_bruteforce(const DensityMatrix& rho, int grid);

}  // namespace dephasim

#endif  // DEPHASIM_CORRELATIONS_HPP
