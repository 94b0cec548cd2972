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

#ifndef DEPHASIM_OPERATORS_HPP
#define DEPHASIM_OPERATORS_HPP

#include <array>
#include <string>

#include "dephasim/types.hpp"

namespace dephasim {

const Mat2& pauli_x();
const Mat2& pauli_y();
const Mat2& pauli_z();

/// Pauli matrices indexed 0,1,2 = x,y,z.
const std::array<Mat2, 3>& paulis();

/// Qutrit dephasing operator S_z = diag(1, 0, -1).
const Mat3& qutrit_sz();

/// Embed a qubit operator as op (x) I3 on the joint space.
Mat6 qubit_operator(const Mat2& op);

/// Embed a qutrit operator as I2 (x) op on the joint space.
Mat6 qutrit_operator(const Mat3& op);

/// Computational basis vector for joint index 0..5.
Vec6 basis_ket(int index);

/// Computational basis vector |q t> with q in {0,1}, t in {0,1,2}.
Vec6 basis_ket(int qubit, int qutrit);

/// Canonical basis labels "00 01 02 10 11 12", in index order.
const std::array<std::string, kDim>& basis_labels();

}  // namespace dephasim

#endif  // DEPHASIM_OPERATORS_HPP
