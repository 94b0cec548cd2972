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

#ifndef DEPHASIM_LINALG_HPP
#define DEPHASIM_LINALG_HPP

#include "dephasim/types.hpp"

namespace dephasim {

/// Eigenvalues in ascending order with a matching orthonormal set of
/// eigenvector columns: input = eigenvectors * diag(eigenvalues) * adjoint.
struct HermitianEigenSystem {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXcd eigenvectors;
};

/// Largest absolute deviation of m from its own adjoint.
double hermiticity_defect(const Eigen::MatrixXcd& m);

/// True when every entry is finite (no NaN/Inf).
bool all_finite(const Eigen::MatrixXcd& m);

/// Diagonalize a Hermitian matrix.
///
/// Throws NotHermitian when the hermiticity defect exceeds `hermiticity_tol`
/// and ConvergenceFailure when the underlying iteration fails. Eigenvalues
/// come back ascending; reconstruction holds to ~1e-12 for well-scaled input.
HermitianEigenSystem hermitian_eigendecompose(const Eigen::MatrixXcd& m,
                                              double hermiticity_tol = 1e-12);

/// Positive-semidefinite square root.
///
/// Eigenvalues in [eigenvalue_floor, 0) are clamped to zero before rooting so
/// that states carrying harmless round-off stay inside the domain; anything
/// below the floor throws NotPSD.
Eigen::MatrixXcd psd_sqrt(const Eigen::MatrixXcd& m,
                          double eigenvalue_floor = -1e-10,
                          double hermiticity_tol = 1e-12);

/// Transpose the qubit index only: in 3x3 blocks [[A,B],[C,D]] -> [[A,C],[B,D]].
Mat6 partial_transpose_qubit(const Mat6& rho);

enum class Subsystem { Qubit, Qutrit };

/// Marginal state of one subsystem: 2x2 for the qubit, 3x3 for the qutrit.
Eigen::MatrixXcd partial_trace(const Mat6& rho, Subsystem keep);

/// Half the absolute-eigenvalue sum of a - b; in [0, 1] for density matrices.
double trace_distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

}  // namespace dephasim

#endif  // DEPHASIM_LINALG_HPP
