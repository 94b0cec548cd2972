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

#ifndef DEPHASIM_TYPES_HPP
#define DEPHASIM_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace dephasim {

using Complex = std::complex<double>;

// The joint system is a qubit (A) times a qutrit (B). Basis index is
// 3*q + t for qubit level q in {0,1} and qutrit level t in {0,1,2}:
// 0..5 <-> |00>, |01>, |02>, |10>, |11>, |12>.
inline constexpr int kQubitDim = 2;
inline constexpr int kQutritDim = 3;
inline constexpr int kDim = kQubitDim * kQutritDim;
inline constexpr int kSuperDim = kDim * kDim;

using Mat2 = Eigen::Matrix<Complex, 2, 2>;
using Mat3 = Eigen::Matrix<Complex, 3, 3>;
using Mat6 = Eigen::Matrix<Complex, 6, 6>;
using Mat36 = Eigen::Matrix<Complex, 36, 36>;
using Vec6 = Eigen::Matrix<Complex, 6, 1>;
using Vec36 = Eigen::Matrix<Complex, 36, 1>;
using RMat3 = Eigen::Matrix3d;
using RVec6 = Eigen::Matrix<double, 6, 1>;

enum class ErrorKind {
  NotHermitian,
  NotPSD,
  TraceNotOne,
  DimensionMismatch,
  ParamOutOfRange,
  UnknownKind,
  NotUnitary,
  NotUnitVector,
  NegativeTime,
  ConvergenceFailure,
  InsufficientSamples,
  NonUniformGrid,
  InvalidArgument,
  ConfigError,
  IoError,
};

std::string_view error_kind_name(ErrorKind kind);

/// All failures surface as this exception; `kind()` tells callers (and the
/// CLI exit-code mapping) what went wrong, the message carries the measured
/// violation.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace dephasim

#endif  // DEPHASIM_TYPES_HPP
