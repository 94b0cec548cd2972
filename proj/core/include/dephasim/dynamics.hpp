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

#ifndef DEPHASIM_DYNAMICS_HPP
#define DEPHASIM_DYNAMICS_HPP

#include <cstdint>
#include <vector>

#include "dephasim/states.hpp"
#include "dephasim/types.hpp"

namespace dephasim {

// The model: qubit and qutrit share one classical stochastic dephasing field.
// The field couples through the collective operator
//
//   G(n) = n . sigma (x) I3  +  I2 (x) S_z,        S_z = diag(1, 0, -1),
//
// where the unit vector n is the field direction seen by the qubit. Ensemble
// averaging over white noise gives the master equation
//
//   d rho / d tau = -(1/4) [G, [G, rho]],
//
// with the damping rate folded into the dimensionless time tau. All coherences
// between G-eigenvectors with eigenvalue gap d decay as exp(-tau d^2 / 4);
// the degenerate eigenspace is untouched.

/// Unit field direction (n_x, n_y, n_z); |n|^2 = 1 within 1e-12.
class Orientation {
 public:
  Orientation(double nx, double ny, double nz);

  /// Rescale an arbitrary non-zero vector onto the unit sphere.
  static Orientation normalized(double nx, double ny, double nz);

  static Orientation x() { return {1.0, 0.0, 0.0}; }
  static Orientation y() { return {0.0, 1.0, 0.0}; }
  static Orientation z() { return {0.0, 0.0, 1.0}; }

  double nx() const noexcept { return n_[0]; }
  double ny() const noexcept { return n_[1]; }
  double nz() const noexcept { return n_[2]; }
  const Eigen::Vector3d& vector() const noexcept { return n_; }

 private:
  Eigen::Vector3d n_;
};

/// G(n) together with its spectral decomposition. The spectrum is
/// {-2, -1, 0, 0, 1, 2} for every unit n (sum of the +-1 qubit spectrum and
/// the {1,0,-1} qutrit spectrum of commuting factors); eigenvalues are snapped
/// to those integers after checking the numerical ones agree within 1e-10.
struct CollectiveOperator {
  Orientation orientation;
  Mat6 matrix;
  RVec6 eigenvalues;   // ascending: -2, -1, 0, 0, 1, 2
  Mat6 eigenvectors;   // columns match eigenvalues
};

CollectiveOperator collective_operator(const Orientation& n);

/// The master-equation generator as a 36x36 matrix L acting on row-major
/// vectorized states: d vec(rho) / d tau = L vec(rho).
struct Generator {
  Orientation orientation;
  Mat36 matrix;
};

/// Assemble L term by term from the three dissipator groups: the qubit
/// double sum over n_i n_j, the qubit-qutrit cross terms with the nested
/// anticommutator, and the pure qutrit term. Algebraically this equals
/// -(1/4)[G, [G, .]]; the test suite checks the two assemblies against each
/// other entrywise.
Generator build_generator(const Orientation& n);

/// Row-major vectorization: vec(rho)[6 j + k] = rho(j, k).
Vec36 vectorize(const Mat6& m);
Mat6 devectorize(const Vec36& v);

/// Propagate in the eigenbasis of G(n): each coherence picks up
/// exp(-tau (g_j - g_k)^2 / 4). Exact for all tau >= 0; tau = 0 returns the
/// input unchanged. Degenerate pairs (g_j = g_k) are preserved exactly, so
/// the whole degenerate block passes through regardless of the eigenvector
/// gauge inside it.
DensityMatrix evolve_exact(const DensityMatrix& rho0, const Orientation& n, double tau);
DensityMatrix evolve_exact(const DensityMatrix& rho0, const CollectiveOperator& op, double tau);

/// Independent cross-check propagator: exp(tau L) applied to vec(rho0) via a
/// dense matrix exponential. Agrees with evolve_exact to ~1e-9 trace distance.
DensityMatrix evolve_superop(const DensityMatrix& rho0, const Orientation& n, double tau);

/// The tau -> infinity limit: project onto the diagonal blocks of the G
/// eigenbasis, rho_inf = sum_g P_g rho P_g, keeping the full rank-2 projector
/// of the degenerate g = 0 eigenspace intact.
DensityMatrix asymptotic_state(const DensityMatrix& rho0, const Orientation& n);
DensityMatrix asymptotic_state(const DensityMatrix& rho0, const CollectiveOperator& op);

/// Monte Carlo unfolding of the ensemble average: each trajectory applies one
/// random collective phase exp(-i theta G) with theta ~ N(0, tau/2), and the
/// trajectories are averaged. Converges to evolve_exact at the usual
/// 1/sqrt(N) rate.
///
/// Each trajectory draws from its own counter-seeded stream, so the estimate
/// is a pure function of (seed, trajectories) and bit-identical across runs
/// and thread schedules.
DensityMatrix stochastic_unfold(const DensityMatrix& rho0, const Orientation& n,
                                double tau, std::int64_t trajectories,
                                std::uint64_t seed);

/// Time series of states and both correlation measures on a uniform tau grid.
struct Trajectory {
  Orientation orientation;
  std::vector<double> times;
  std::vector<DensityMatrix> states;
  std::vector<double> negativity;
  std::vector<double> lqu;
};

/// Sample [0, tau_max] at `steps` uniformly spaced points (endpoints
/// included) with evolve_exact, attaching negativity and local quantum
/// uncertainty at every point. Requires tau_max > 0 and steps >= 2.
Trajectory sample_trajectory(const DensityMatrix& rho0, const Orientation& n,
                             double tau_max, int steps);

}  // namespace dephasim

#endif  // DEPHASIM_DYNAMICS_HPP
