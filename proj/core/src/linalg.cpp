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

#include "dephasim/linalg.hpp"

#include <cmath>
#include <sstream>

namespace dephasim {

double hermiticity_defect(const Eigen::MatrixXcd& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

bool all_finite(const Eigen::MatrixXcd& m) {
  return m.allFinite();
}

HermitianEigenSystem hermitian_eigendecompose(const Eigen::MatrixXcd& m,
                                              double hermiticity_tol) {
  if (m.rows() != m.cols()) {
    std::ostringstream oss;
    oss << "expected a square matrix, got " << m.rows() << "x" << m.cols();
    throw Error(ErrorKind::DimensionMismatch, oss.str());
  }
  if (!all_finite(m)) {
    throw Error(ErrorKind::InvalidArgument, "matrix has non-finite entries");
  }
  const double defect = hermiticity_defect(m);
  if (defect > hermiticity_tol) {
    std::ostringstream oss;
    oss << "hermiticity defect " << defect << " exceeds tolerance " << hermiticity_tol;
    throw Error(ErrorKind::NotHermitian, oss.str());
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::ConvergenceFailure, "eigenvalue iteration did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

Eigen::MatrixXcd psd_sqrt(const Eigen::MatrixXcd& m, double eigenvalue_floor,
                          double hermiticity_tol) {
  HermitianEigenSystem sys = hermitian_eigendecompose(m, hermiticity_tol);
  const double min_eig = sys.eigenvalues.minCoeff();
  if (min_eig < eigenvalue_floor) {
    std::ostringstream oss;
    oss << "minimum eigenvalue " << min_eig << " below floor " << eigenvalue_floor;
    throw Error(ErrorKind::NotPSD, oss.str());
  }
  // Eigenvalues inside [floor, |floor|] are numerically indistinguishable
  // from zero; rooting them would turn O(eps) noise into O(sqrt(eps)) kernel
  // contamination, so the whole window collapses to zero first.
  Eigen::VectorXd clamped = sys.eigenvalues;
  for (int i = 0; i < clamped.size(); ++i) {
    if (clamped(i) <= std::abs(eigenvalue_floor)) clamped(i) = 0.0;
  }
  Eigen::VectorXd roots = clamped.cwiseSqrt();
  Eigen::MatrixXcd out = sys.eigenvectors * roots.asDiagonal() * sys.eigenvectors.adjoint();
  // The composition is Hermitian up to round-off; fold the defect away.
  return ((out + out.adjoint()) / 2.0).eval();
}

Mat6 partial_transpose_qubit(const Mat6& rho) {
  Mat6 out;
  out.block<3, 3>(0, 0) = rho.block<3, 3>(0, 0);
  out.block<3, 3>(0, 3) = rho.block<3, 3>(3, 0);
  out.block<3, 3>(3, 0) = rho.block<3, 3>(0, 3);
  out.block<3, 3>(3, 3) = rho.block<3, 3>(3, 3);
  return out;
}

Eigen::MatrixXcd partial_trace(const Mat6& rho, Subsystem keep) {
  if (keep == Subsystem::Qubit) {
    Mat2 out = Mat2::Zero();
    for (int i = 0; i < kQubitDim; ++i) {
      for (int j = 0; j < kQubitDim; ++j) {
        out(i, j) = rho.block<3, 3>(3 * i, 3 * j).trace();
      }
    }
    return out;
  }
  Mat3 out = rho.block<3, 3>(0, 0) + rho.block<3, 3>(3, 3);
  return out;
}

double trace_distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols()) {
    std::ostringstream oss;
    oss << "trace distance needs equal square matrices, got " << a.rows() << "x"
        << a.cols() << " and " << b.rows() << "x" << b.cols();
    throw Error(ErrorKind::DimensionMismatch, oss.str());
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(a - b,
                                                         Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::ConvergenceFailure, "eigenvalue iteration did not converge");
  }
  return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NotPSD: return "NotPSD";
    case ErrorKind::TraceNotOne: return "TraceNotOne";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ParamOutOfRange: return "ParamOutOfRange";
    case ErrorKind::UnknownKind: return "UnknownKind";
    case ErrorKind::NotUnitary: return "NotUnitary";
    case ErrorKind::NotUnitVector: return "NotUnitVector";
    case ErrorKind::NegativeTime: return "NegativeTime";
    case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorKind::InsufficientSamples: return "InsufficientSamples";
    case ErrorKind::NonUniformGrid: return "NonUniformGrid";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ConfigError: return "ConfigError";
    case ErrorKind::IoError: return "IoError";
  }
  return "UnknownError";
}

}  // namespace dephasim
