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

#include "qasmtrans/pulsesim.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <random>
#include <string>

#include "qasmtrans/errors.hpp"

namespace qasmtrans {

double Envelope::value(double t) const {
  if (t < t0 || t >= t0 + duration) return 0.0;
  const double u = t - t0;
  switch (shape) {
    case Shape::Constant:
      return 1.0;
    case Shape::Gaussian: {
      const double sigma = duration / 4.0;
      const double x = u - duration / 2.0;
      return std::exp(-x * x / (2.0 * sigma * sigma));
    }
    case Shape::FlatTop:
      if (u < ramp) return 0.5 * (1.0 - std::cos(kPi * u / ramp));
      if (duration - u < ramp) return 0.5 * (1.0 - std::cos(kPi * (duration - u) / ramp));
      return 1.0;
  }
  return 0.0;
}

double Envelope::area(double dt) const {
  const auto k0 = static_cast<long long>(std::llround(t0 / dt));
  const auto k1 = static_cast<long long>(std::llround((t0 + duration) / dt));
  double sum = 0.0;
  for (long long k = k0; k < k1; ++k) sum += value((static_cast<double>(k) + 0.5) * dt);
  return sum * dt;
}

double PulseModel::dephasing_rate(double t1_us, double t2_us) {
  return std::max(0.0, 1.0 / (t2_us * 1e3) - 1.0 / (2.0 * t1_us * 1e3));
}

double PulseModel::relaxation_rate(double t1_us) { return 1.0 / (t1_us * 1e3); }

CMat hamiltonian_at(const PulseModel& m, double t) {
  const Eigen::Index dim = Eigen::Index{1} << m.num_qubits;
  CMat h = CMat::Zero(dim, dim);
  for (const DriveControl& d : m.drives) {
    const double e = d.envelope.value(t);
    if (e == 0.0) continue;
    const double x = 0.5 * d.amplitude * e * std::cos(d.phase);
    const double y = 0.5 * d.amplitude * e * std::sin(d.phase);
    const double z = 0.5 * d.detuning * e;
    const Eigen::Index bit = Eigen::Index{1} << d.qubit;
    for (Eigen::Index i = 0; i < dim; ++i) {
      h(i, i) += (i & bit) ? -z : z;
      if (i & bit) continue;
      const Eigen::Index j = i | bit;
      h(j, i) += cplx(x, y);
      h(i, j) += cplx(x, -y);
    }
  }
  for (const CouplerControl& c : m.couplers) {
    const double e = c.envelope.value(t);
    if (e == 0.0) continue;
    // (XX + YY)/2 = |01><10| + |10><01|.
    const double v = c.amplitude * e;
    const Eigen::Index ba = Eigen::Index{1} << c.a, bb = Eigen::Index{1} << c.b;
    for (Eigen::Index i = 0; i < dim; ++i) {
      if (((i & ba) != 0) != ((i & bb) != 0)) h(i ^ (ba | bb), i) += v;
    }
  }
  return h;
}

namespace {

// Whole steps on the k*dt grid plus a shorter last step when the horizon
// falls between grid points.
struct StepPlan {
  long long full = 0;
  double rest = 0.0;
};

StepPlan plan_steps(const PulseModel& m, double horizon_ns) {
  StepPlan p;
  if (!(horizon_ns > 0.0)) return p;
  const double ratio = horizon_ns / m.dt_ns;
  p.full = static_cast<long long>(std::floor(ratio + 1e-9));
  const double rest = horizon_ns - static_cast<double>(p.full) * m.dt_ns;
  if (rest > 1e-9 * m.dt_ns) p.rest = rest;
  return p;
}

// Caches the last step exponential; flat stretches of a schedule reuse it.
class StepExp {
 public:
  explicit StepExp(double dt) : dt_(dt) {}
  const CMat& operator()(const CMat& h) {
    if (last_h_.size() == 0 || h != last_h_) {
      last_h_ = h;
      last_u_ = h.isZero(0.0) ? CMat::Identity(h.rows(), h.cols()) : expm_hermitian(h, dt_);
    }
    return last_u_;
  }

 private:
  double dt_;
  CMat last_h_, last_u_;
};

double hermiticity_error(const CMat& r) { return (r - r.adjoint()).cwiseAbs().maxCoeff(); }

}  // namespace

CMat propagate(const PulseModel& m, double horizon_ns) {
  if (m.num_qubits > kMaxPropagatorQubits) {
    throw TooManyQubits("propagate supports at most " + std::to_string(kMaxPropagatorQubits) +
                        " qubits");
  }
  const Eigen::Index dim = Eigen::Index{1} << m.num_qubits;
  CMat u = CMat::Identity(dim, dim);
  StepExp step(m.dt_ns);
  const StepPlan plan = plan_steps(m, horizon_ns);
  for (long long k = 0; k < plan.full; ++k) {
    const CMat h = hamiltonian_at(m, (static_cast<double>(k) + 0.5) * m.dt_ns);
    u = step(h) * u;
  }
  if (plan.rest > 0.0) {
    const double t = static_cast<double>(plan.full) * m.dt_ns + 0.5 * plan.rest;
    u = expm_hermitian(hamiltonian_at(m, t), plan.rest) * u;
  }
  return u;
}

CMat lindblad_evolve(const PulseModel& m, const CMat& rho0, double horizon_ns) {
  if (m.num_qubits > kMaxDensityQubits) {
    throw TooManyQubits("density-matrix runs support at most " +
                        std::to_string(kMaxDensityQubits) + " qubits");
  }
  const Eigen::Index dim = Eigen::Index{1} << m.num_qubits;
  if (rho0.rows() != dim || rho0.cols() != dim) {
    throw DimensionMismatch("initial density matrix does not match the model size");
  }
  // Per-qubit channels over half a step of length tau: amplitude damping
  // Kraus pair and the coherence factor of the dephasing term.
  struct HalfStep {
    std::vector<CMat> k0, k1;
    std::vector<double> coherence;
  };
  auto half_step = [&](double tau) {
    HalfStep c;
    for (int q = 0; q < m.num_qubits; ++q) {
      const double kappa = q < static_cast<int>(m.kappa.size()) ? m.kappa[q] : 0.0;
      const double gamma = q < static_cast<int>(m.gamma.size()) ? m.gamma[q] : 0.0;
      const double p = 1.0 - std::exp(-kappa * tau);
      CMat a0 = CMat::Identity(dim, dim), a1 = CMat::Zero(dim, dim);
      const Eigen::Index bit = Eigen::Index{1} << q;
      for (Eigen::Index i = 0; i < dim; ++i) {
        if (i & bit) {
          a0(i, i) = std::sqrt(1.0 - p);
          a1(i ^ bit, i) = std::sqrt(p);
        }
      }
      c.k0.push_back(a0);
      c.k1.push_back(a1);
      c.coherence.push_back(std::exp(-gamma * tau));
    }
    return c;
  };
  auto dissipate = [&](const HalfStep& c, CMat& r) {
    for (int q = 0; q < m.num_qubits; ++q) {
      if (c.k1[q].isZero(0.0) && c.coherence[q] == 1.0) continue;
      r = c.k0[q] * r * c.k0[q].adjoint() + c.k1[q] * r * c.k1[q].adjoint();
      const Eigen::Index bit = Eigen::Index{1} << q;
      for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index j = 0; j < dim; ++j) {
          if ((i & bit) != (j & bit)) r(i, j) *= c.coherence[q];
        }
      }
    }
  };
  auto check = [&](const CMat& r) {
    if (std::abs(r.trace() - cplx(1.0)) > 1e-8 || hermiticity_error(r) > 1e-9) {
      throw StepTooLarge("density matrix drifted; reduce dt_ns");
    }
  };
  CMat rho = rho0;
  StepExp step(m.dt_ns);
  const StepPlan plan = plan_steps(m, horizon_ns);
  const HalfStep half = half_step(0.5 * m.dt_ns);
  for (long long k = 0; k < plan.full; ++k) {
    dissipate(half, rho);
    const CMat& u = step(hamiltonian_at(m, (static_cast<double>(k) + 0.5) * m.dt_ns));
    rho = u * rho * u.adjoint();
    dissipate(half, rho);
    if ((k & 1023) == 1023) check(rho);
  }
  if (plan.rest > 0.0) {
    const HalfStep tail = half_step(0.5 * plan.rest);
    dissipate(tail, rho);
    const double t = static_cast<double>(plan.full) * m.dt_ns + 0.5 * plan.rest;
    const CMat u = expm_hermitian(hamiltonian_at(m, t), plan.rest);
    rho = u * rho * u.adjoint();
    dissipate(tail, rho);
  }
  check(rho);
  return rho;
}

double avg_gate_fidelity(const CMat& u, const CMat& target) {
  if (u.rows() != target.rows() || u.cols() != target.cols() || u.rows() != u.cols()) {
    throw DimensionMismatch("avg_gate_fidelity needs two square matrices of equal size");
  }
  const double d = static_cast<double>(u.rows());
  const double tr = std::abs((target.adjoint() * u).trace());
  return (tr * tr + d) / (d * (d + 1.0));
}

double state_fidelity(const CMat& rho, const CVec& psi) {
  if (rho.rows() != psi.size() || rho.cols() != psi.size()) {
    throw DimensionMismatch("state_fidelity dimension mismatch");
  }
  return std::real(psi.dot(rho * psi));
}

std::vector<double> fd_gradient(const Objective& f, const std::vector<double>& x,
                                const std::vector<double>& lower,
                                const std::vector<double>& upper) {
  std::vector<double> g(x.size(), 0.0);
  std::vector<double> p = x;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double h = 1e-6 * std::max(1.0, std::abs(x[i]));
    const double hi = std::min(x[i] + h, upper[i]);
    const double lo = std::max(x[i] - h, lower[i]);
    if (hi <= lo) continue;
    p[i] = hi;
    const double fh = f(p);
    p[i] = lo;
    const double fl = f(p);
    p[i] = x[i];
    g[i] = (fh - fl) / (hi - lo);
  }
  return g;
}

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

struct Run {
  std::vector<double> x;
  double value;
  int evaluations;
};

// Minimizes -f from x0; records best-so-far values of f in `trace`.
Run lbfgs_box(const Objective& f, std::vector<double> x, const std::vector<double>& lo,
              const std::vector<double>& hi, const OptimizeOptions& opts,
              std::vector<double>& trace, double best_before) {
  const std::size_t n = x.size();
  int evals = 0;
  auto F = [&](const std::vector<double>& p) {
    ++evals;
    return -f(p);
  };
  auto gradient = [&](const std::vector<double>& p) {
    evals += 2 * static_cast<int>(n);
    auto g = fd_gradient(f, p, lo, hi);
    for (double& v : g) v = -v;
    return g;
  };
  for (std::size_t i = 0; i < n; ++i) x[i] = std::clamp(x[i], lo[i], hi[i]);
  double fx = F(x);
  auto record = [&](double v) {
    best_before = std::max(best_before, v);
    trace.push_back(best_before);
  };
  record(-fx);
  if (n == 0) return {x, -fx, evals};

  std::deque<std::pair<std::vector<double>, std::vector<double>>> mem;
  std::vector<double> g = gradient(x);
  while (evals + 2 * static_cast<int>(n) + 1 <= opts.budget) {
    std::vector<double> pg = g;
    for (std::size_t i = 0; i < n; ++i) {
      if ((x[i] <= lo[i] && pg[i] > 0.0) || (x[i] >= hi[i] && pg[i] < 0.0)) pg[i] = 0.0;
    }
    if (std::sqrt(dot(pg, pg)) < opts.gtol) break;

    // Two-loop recursion on the projected gradient.
    std::vector<double> d = pg;
    std::vector<double> alpha(mem.size());
    for (std::size_t k = mem.size(); k-- > 0;) {
      const auto& [s, y] = mem[k];
      alpha[k] = dot(s, d) / dot(y, s);
      for (std::size_t i = 0; i < n; ++i) d[i] -= alpha[k] * y[i];
    }
    if (!mem.empty()) {
      const auto& [s, y] = mem.back();
      const double scale = dot(s, y) / dot(y, y);
      for (double& v : d) v *= scale;
    }
    for (std::size_t k = 0; k < mem.size(); ++k) {
      const auto& [s, y] = mem[k];
      const double beta = dot(y, d) / dot(y, s);
      for (std::size_t i = 0; i < n; ++i) d[i] += s[i] * (alpha[k] - beta);
    }
    for (std::size_t i = 0; i < n; ++i) {
      d[i] = -d[i];
      if (pg[i] == 0.0 && g[i] != 0.0) d[i] = 0.0;
    }
    if (dot(d, pg) >= 0.0) {
      mem.clear();
      for (std::size_t i = 0; i < n; ++i) d[i] = -pg[i];
    }

    double step = 1.0;
    std::vector<double> xn(n);
    double fn = fx;
    bool accepted = false;
    while (evals < opts.budget) {
      for (std::size_t i = 0; i < n; ++i) xn[i] = std::clamp(x[i] + step * d[i], lo[i], hi[i]);
      std::vector<double> s(n);
      for (std::size_t i = 0; i < n; ++i) s[i] = xn[i] - x[i];
      if (std::sqrt(dot(s, s)) <= 1e-15 * (1.0 + std::sqrt(dot(x, x)))) break;
      fn = F(xn);
      if (fn <= fx + 1e-4 * dot(pg, s)) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;
    if (evals + 2 * static_cast<int>(n) > opts.budget) {
      x = xn;
      fx = fn;
      record(-fx);
      break;
    }
    std::vector<double> gn = gradient(xn);
    std::vector<double> s(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
      s[i] = xn[i] - x[i];
      y[i] = gn[i] - g[i];
    }
    if (dot(s, y) > 1e-12 * std::sqrt(dot(s, s) * dot(y, y))) {
      mem.emplace_back(s, y);
      if (static_cast<int>(mem.size()) > opts.memory) mem.pop_front();
    }
    const bool stalled = fx - fn <= 1e-16 * std::max(1.0, std::abs(fx));
    x = xn;
    fx = fn;
    g = gn;
    record(-fx);
    if (stalled) break;
  }
  return {x, -fx, evals};
}

}  // namespace

OptimizeResult optimize_pulse(const Objective& f, std::vector<double> x0,
                              const std::vector<double>& lower,
                              const std::vector<double>& upper,
                              const OptimizeOptions& opts) {
  if (lower.size() != x0.size() || upper.size() != x0.size()) {
    throw DimensionMismatch("bounds do not match the parameter count");
  }
  OptimizeResult r;
  double best = -std::numeric_limits<double>::infinity();
  Run run = lbfgs_box(f, std::move(x0), lower, upper, opts, r.trace, best);
  r.x = run.x;
  r.value = run.value;
  r.evaluations = run.evaluations;
  std::mt19937_64 rng(opts.seed);
  for (int k = 0; k < opts.restarts; ++k) {
    std::vector<double> start(lower.size());
    for (std::size_t i = 0; i < start.size(); ++i) {
      start[i] = std::uniform_real_distribution<double>(lower[i], upper[i])(rng);
    }
    Run next = lbfgs_box(f, start, lower, upper, opts, r.trace, r.value);
    r.evaluations += next.evaluations;
    if (next.value > r.value) {
      r.x = next.x;
      r.value = next.value;
    }
  }
  return r;
}

}  // namespace qasmtrans
