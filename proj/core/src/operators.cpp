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

#include "dephasim/operators.hpp"

namespace dephasim {

namespace {

Mat2 make_pauli_x() {
  Mat2 m;
  m << 0, 1,
       1, 0;
  return m;
}

Mat2 make_pauli_y() {
  Mat2 m;
  m << Complex(0, 0), Complex(0, -1),
       Complex(0, 1), Complex(0, 0);
  return m;
}

Mat2 make_pauli_z() {
  Mat2 m;
  m << 1, 0,
       0, -1;
  return m;
}

}  // namespace

const Mat2& pauli_x() {
  static const Mat2 m = make_pauli_x();
  return m;
}

const Mat2& pauli_y() {
  static const Mat2 m = make_pauli_y();
  return m;
}

const Mat2& pauli_z() {
  static const Mat2 m = make_pauli_z();
  return m;
}

const std::array<Mat2, 3>& paulis() {
  static const std::array<Mat2, 3> all = {pauli_x(), pauli_y(), pauli_z()};
  return all;
}

const Mat3& qutrit_sz() {
  static const Mat3 m = [] {
    Mat3 s = Mat3::Zero();
    s(0, 0) = 1.0;
    s(2, 2) = -1.0;
    return s;
  }();
  return m;
}

Mat6 qubit_operator(const Mat2& op) {
  Mat6 out;
  for (int i = 0; i < kQubitDim; ++i) {
    for (int j = 0; j < kQubitDim; ++j) {
      out.block<3, 3>(3 * i, 3 * j) = op(i, j) * Mat3::Identity();
    }
  }
  return out;
}

Mat6 qutrit_operator(const Mat3& op) {
  Mat6 out = Mat6::Zero();
  out.block<3, 3>(0, 0) = op;
  out.block<3, 3>(3, 3) = op;
  return out;
}

Vec6 basis_ket(int index) {
  if (index < 0 || index >= kDim) {
    throw Error(ErrorKind::InvalidArgument,
                "basis index " + std::to_string(index) + " outside 0..5");
  }
  Vec6 v = Vec6::Zero();
  v(index) = 1.0;
  return v;
}

Vec6 basis_ket(int qubit, int qutrit) {
  if (qubit < 0 || qubit >= kQubitDim || qutrit < 0 || qutrit >= kQutritDim) {
    throw Error(ErrorKind::InvalidArgument, "basis levels outside qubit x qutrit range");
  }
  return basis_ket(kQutritDim * qubit + qutrit);
}

const std::array<std::string, kDim>& basis_labels() {
  static const std::array<std::string, kDim> labels = {"00", "01", "02",
                                                       "10", "11", "12"};
  return labels;
}

}  // namespace dephasim
