// Copyright 2026 The qasmtrans Authors
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

#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "qasmtrans/linalg.hpp"

namespace qasmtrans {

// Units: time in ns, angular rates in rad/ns.

/// Normalized pulse envelope on [t0, t0 + duration).
struct Envelope {
  enum class Shape { Gaussian, FlatTop, Constant };
  Shape shape = Shape::Constant;
  double t0 = 0.0;
  double duration = 0.0;
  /// Cosine ramp length of a flat-top envelope.
  double ramp = 0.0;

  /// Gaussian: sigma = duration / 4 about the midpoint, cut at +-2 sigma.
  /// Flat-top: raised-cosine ramps of length `ramp` at both ends.
  double value(double t) const;
  /// Midpoint-rule integral on the global step grid k*dt used by the
  /// integrators, so that amplitude / area gives an exact rotation angle.
  double area(double dt) const;
  double end() const { return t0 + duration; }
};

/// X/Y drive on one qubit: contributes (A env / 2)(cos phi X + sin phi Y)
/// plus (delta env / 2) Z.
struct DriveControl {
  int qubit = 0;
  Envelope envelope;
  double amplitude = 0.0;
  double phase = 0.0;
  double detuning = 0.0;
};

/// Exchange coupling: contributes (J env / 2)(XX + YY) on the pair.
struct CouplerControl {
  int a = 0;
  int b = 0;
  Envelope envelope;
  double amplitude = 0.0;
};

struct PulseModel {
  int num_qubits = 1;
  double dt_ns = 0.1;
  std::vector<DriveControl> drives;
  std::vector<CouplerControl> couplers;
  /// Relaxation rate 1/T1 and dephasing rate per qubit (1/ns).
  std::vector<double> kappa;
  std::vector<double> gamma;

  /// gamma = 1/T2 - 1/(2 T1), clamped at 0; times in us.
  static double dephasing_rate(double t1_us, double t2_us);
  static double relaxation_rate(double t1_us);
};

inline constexpr int kMaxDensityQubits = 4;
inline constexpr int kMaxPropagatorQubits = 10;

/// H(t) with qubit q on index bit q.
CMat hamiltonian_at(const PulseModel& model, double t);

/// Time-ordered product of midpoint exponentials exp(-i H(t_k + dt/2) dt)
/// over the whole steps inside T, then one shorter step up to T when T is
/// off the grid. Throws TooManyQubits.
CMat propagate(const PulseModel& model, double horizon_ns);

/// Open-system evolution: each step applies half a step of relaxation and
/// dephasing, the unitary midpoint step, then the other half. The
/// dissipative channels are the exact solutions of the relaxation term
/// kappa (s- rho s+ - {s+ s-, rho}/2) and the dephasing term
/// (gamma/2)(Z rho Z - rho), so off-diagonals decay as exp(-gamma t).
/// Throws TooManyQubits, StepTooLarge.
CMat lindblad_evolve(const PulseModel& model, const CMat& rho0, double horizon_ns);

/// (|Tr(Ut^dagger U)|^2 + d) / (d (d + 1)). Throws DimensionMismatch.
double avg_gate_fidelity(const CMat& u, const CMat& target);

/// <psi| rho |psi>. Throws DimensionMismatch.
double state_fidelity(const CMat& rho, const CVec& psi);

using Objective = std::function<double(const std::vector<double>&)>;

struct OptimizeOptions {
  /// Objective evaluations per start.
  int budget = 200;
  int memory = 10;
  /// Extra starts drawn uniformly inside the bounds.
  int restarts = 0;
  std::uint64_t seed = 0;
  /// Stop once the projected gradient norm falls below this.
  double gtol = 1e-9;
};

struct OptimizeResult {
  std::vector<double> x;
  double value = 0.0;
  /// Best value so far after each iteration (non-decreasing).
  std::vector<double> trace;
  int evaluations = 0;
};

/// Central differences with step 1e-6 * max(1, |x_i|), shortened to stay
/// inside the bounds.
std::vector<double> fd_gradient(const Objective& f, const std::vector<double>& x,
                                const std::vector<double>& lower,
                                const std::vector<double>& upper);

/// Maximizes `f` inside the box with projected limited-memory BFGS and an
/// Armijo backtracking line search. Returns the best point seen.
OptimizeResult optimize_pulse(const Objective& f, std::vector<double> x0,
                              const std::vector<double>& lower,
                              const std::vector<double>& upper,
                              const OptimizeOptions& opts = {});

}  // namespace qasmtrans
