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

#include "qasmtrans/ashn.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "qasmtrans/errors.hpp"

namespace qasmtrans {

namespace {

constexpr double kHzToRadPerNs = 2.0 * kPi * 1e-9;

Mat4 kron2(const Mat2& hi, const Mat2& lo) {
  Mat4 out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = hi(i, j) * lo;
  }
  return out;
}

Mat4 pair_hamiltonian(double w1, double w2, double delta, double g) {
  const Mat2 id = Mat2::Identity();
  const Mat2 x = pauli_x();
  const Mat2 y = pauli_y();
  const Mat2 z = pauli_z();
  return 0.5 * (w1 * kron2(id, x) + w2 * kron2(x, id) + delta * (kron2(id, z) + kron2(z, id)) +
                g * (kron2(x, x) + kron2(y, y)));
}

Envelope flat_top(double t0, double duration, double ramp) {
  Envelope e;
  e.shape = Envelope::Shape::FlatTop;
  e.t0 = t0;
  e.duration = duration;
  e.ramp = ramp;
  return e;
}

Envelope gaussian(double t0, double duration) {
  Envelope e;
  e.shape = Envelope::Shape::Gaussian;
  e.t0 = t0;
  e.duration = duration;
  return e;
}

double weyl_fidelity(const WeylPoint& p, const WeylPoint& q) {
  return avg_gate_fidelity(weyl_unitary(p.a, p.b, p.c), weyl_unitary(q.a, q.b, q.c));
}

// Two correction slots on one qubit realizing `u` up to phase.
void add_corrections(PulseModel& m, int qubit, const Mat2& u, double t0, double slot) {
  const TwoPulse tp = euler_two_pulse(u);
  const double pulses[2][2] = {{tp.theta1, tp.phi1}, {tp.theta2, tp.phi2}};
  for (int k = 0; k < 2; ++k) {
    if (pulses[k][0] == 0.0) continue;
    DriveControl d;
    d.qubit = qubit;
    d.envelope = gaussian(t0 + k * slot, slot);
    d.amplitude = pulses[k][0] / d.envelope.area(m.dt_ns);
    d.phase = pulses[k][1];
    m.drives.push_back(d);
  }
}

}  // namespace

AshnPairModel AshnPairModel::from(const PulseParams& p) {
  AshnPairModel m;
  m.g = p.coupling_hz * kHzToRadPerNs;
  m.max_drive = p.max_drive_hz * kHzToRadPerNs;
  m.ramp_ns = p.ramp_ns;
  m.dt_ns = p.dt_ns;
  m.drive_duration_ns = p.drive_duration_ns;
  return m;
}

double AshnGate::total_duration_ns() const {
  return 4.0 * model.drive_duration_ns + params.duration_ns;
}

Mat4 ashn_unitary(const AshnParams& p, const AshnPairModel& model) {
  if (p.duration_ns <= 0.0) return Mat4::Identity();
  const double area = flat_top(0.0, p.duration_ns, model.ramp_ns).area(model.dt_ns);
  return expm_hermitian(pair_hamiltonian(p.omega1, p.omega2, p.delta, p.g), area);
}

PulseModel ashn_block_model(const AshnGate& gate, const Mat4& physical_target, double t0) {
  const AshnPairModel& am = gate.model;
  PulseModel m;
  m.num_qubits = 2;
  m.dt_ns = am.dt_ns;
  m.kappa.assign(2, 0.0);
  m.gamma.assign(2, 0.0);

  // Q = lq (K1 x K2) Uw (K3 x K4), A = la (L1 x L2) Uw (L3 x L4), so
  // Q ~ (K1 L1^+ x K2 L2^+) A (L3^+ K3 x L4^+ K4). K1/K3 act on model qubit 1.
  const WeylPoint q = kak_decompose(physical_target);
  const WeylPoint& a = gate.entangler_weyl;
  const double slot = am.drive_duration_ns;
  add_corrections(m, 1, a.k3.adjoint() * q.k3, t0, slot);
  add_corrections(m, 0, a.k4.adjoint() * q.k4, t0, slot);

  const double t_mid = t0 + 2.0 * slot;
  const AshnParams& p = gate.params;
  if (p.duration_ns > 0.0) {
    const Envelope env = flat_top(t_mid, p.duration_ns, am.ramp_ns);
    const double w[2] = {p.omega1, p.omega2};
    for (int k = 0; k < 2; ++k) {
      DriveControl d;
      d.qubit = k;
      d.envelope = env;
      d.amplitude = w[k];
      d.detuning = p.delta;
      m.drives.push_back(d);
    }
    CouplerControl c;
    c.a = 0;
    c.b = 1;
    c.envelope = env;
    c.amplitude = p.g;
    m.couplers.push_back(c);
  }

  const double t_post = t_mid + p.duration_ns;
  add_corrections(m, 1, q.k1 * a.k1.adjoint(), t_post, slot);
  add_corrections(m, 0, q.k2 * a.k2.adjoint(), t_post, slot);
  return m;
}

AshnGate synthesize_ashn(const Mat4& target, const AshnPairModel& model, const AshnOptions& opts) {
  if (model.g <= 0.0) throw Infeasible("AshN needs a positive coupling strength");
  AshnGate gate;
  gate.model = model;
  gate.target = target;
  gate.target_weyl = kak_decompose(target);
  gate.params.g = model.g;
  const WeylPoint& tw = gate.target_weyl;
  const double reach = tw.a + tw.b + std::abs(tw.c);

  auto finish = [&]() {
    gate.entangler = ashn_unitary(gate.params, model);
    gate.entangler_weyl = kak_decompose(gate.entangler);
    gate.nonlocal_fidelity = weyl_fidelity(gate.entangler_weyl, tw);
    const PulseModel block = ashn_block_model(gate, target);
    gate.fidelity = avg_gate_fidelity(propagate(block, gate.total_duration_ns()), target);
  };

  if (reach < 1e-9) {
    finish();
    return gate;
  }

  const double bound = model.max_drive;
  const std::vector<double> lo(3, -bound);
  const std::vector<double> hi(3, bound);
  const double spread = std::min(bound, 8.0 * model.g);
  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> uni(-spread, spread);

  // Evaluates one duration; returns best (F, x) and charges the budget.
  int used = 0;
  std::vector<double> warm;
  auto try_duration = [&](double duration, std::vector<double>& best_x, double goal) {
    AshnParams p = gate.params;
    p.duration_ns = duration;
    const Objective f = [&](const std::vector<double>& x) {
      AshnParams q = p;
      q.omega1 = x[0];
      q.omega2 = x[1];
      q.delta = x[2];
      return weyl_fidelity(kak_decompose(ashn_unitary(q, model)), tw);
    };
    std::vector<std::vector<double>> starts;
    if (!warm.empty()) starts.push_back(warm);
    starts.push_back({0.0, 0.0, 0.0});
    while (static_cast<int>(starts.size()) < opts.starts_per_duration) {
      const double a = uni(rng);
      const double b = uni(rng);
      const double c = uni(rng);
      starts.push_back({a, b, c});
    }
    double best = -1.0;
    for (const auto& x0 : starts) {
      if (used >= opts.budget) break;
      OptimizeOptions oo;
      oo.budget = std::min(opts.evals_per_start, opts.budget - used);
      const OptimizeResult r = optimize_pulse(f, x0, lo, hi, oo);
      used += std::max(1, r.evaluations);
      if (r.value > best) {
        best = r.value;
        best_x = r.x;
      }
      if (best >= goal) break;
    }
    if (!best_x.empty()) warm = best_x;
    return best;
  };

  const double ramp = model.ramp_ns;
  const double goal = std::max(opts.threshold, opts.target);
  const double first = std::ceil(reach / model.g + ramp - 1e-9);
  double best_f = -1.0;
  std::vector<double> best_x;
  double found = -1.0;
  auto consider = [&](double d, double fval, const std::vector<double>& x) {
    if (fval > best_f) {
      best_f = fval;
      best_x = x;
      found = d;
    }
  };
  double last_fail = first - 1.0;
  bool reached = false;
  for (double d = first; used < opts.budget; d += opts.coarse_step_ns) {
    std::vector<double> x;
    const double fval = try_duration(d, x, goal);
    consider(d, fval, x);
    if (fval >= goal) {
      reached = true;
      break;
    }
    last_fail = d;
  }
  // Refine inside the last coarse step; the shortest duration that reaches
  // the goal wins.
  if (reached) {
    for (double d = last_fail + 1.0; d < found && used < opts.budget; d += 1.0) {
      std::vector<double> x;
      const double fval = try_duration(d, x, goal);
      if (fval >= goal) {
        best_f = fval;
        best_x = x;
        found = d;
        break;
      }
    }
  }
  gate.evaluations = used;
  if (best_f < opts.threshold) throw DidNotConverge(best_f);

  gate.params.duration_ns = found;
  gate.params.omega1 = best_x[0];
  gate.params.omega2 = best_x[1];
  gate.params.delta = best_x[2];
  finish();
  return gate;
}

}  // namespace qasmtrans
