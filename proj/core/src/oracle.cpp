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

#include "qasmtrans/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "qasmtrans/errors.hpp"
#include "qasmtrans/gates.hpp"
#include "qasmtrans/ir.hpp"

namespace qasmtrans {

void apply_gate(CVec& state, int num_qubits, const CMat& gate,
                const std::vector<int>& qubits) {
  const int k = static_cast<int>(qubits.size());
  const Eigen::Index dim = Eigen::Index{1} << k;
  if (gate.rows() != dim || gate.cols() != dim) {
    throw DimensionMismatch("gate matrix does not match its qubit count");
  }
  const std::size_t size = std::size_t{1} << num_qubits;
  if (static_cast<std::size_t>(state.size()) != size) {
    throw DimensionMismatch("state size does not match qubit count");
  }
  if (k == 1) {
    const std::size_t bit = std::size_t{1} << qubits[0];
    const cplx g00 = gate(0, 0), g01 = gate(0, 1), g10 = gate(1, 0), g11 = gate(1, 1);
    for (std::size_t i = 0; i < size; ++i) {
      if (i & bit) continue;
      const cplx a = state[static_cast<Eigen::Index>(i)];
      const cplx b = state[static_cast<Eigen::Index>(i | bit)];
      state[static_cast<Eigen::Index>(i)] = g00 * a + g01 * b;
      state[static_cast<Eigen::Index>(i | bit)] = g10 * a + g11 * b;
    }
    return;
  }
  // Generic path: gather the 2^k amplitudes that differ only on the gate's
  // qubits, multiply, scatter. offsets[j] is the state offset of gate row j.
  std::vector<std::size_t> offsets(static_cast<std::size_t>(dim), 0);
  std::size_t mask = 0;
  for (int j = 0; j < dim; ++j) {
    for (int b = 0; b < k; ++b) {
      if (j & (1 << (k - 1 - b))) offsets[static_cast<std::size_t>(j)] |= std::size_t{1} << qubits[b];
    }
  }
  for (int q : qubits) mask |= std::size_t{1} << q;
  std::vector<cplx> in(static_cast<std::size_t>(dim)), out(static_cast<std::size_t>(dim));
  for (std::size_t i = 0; i < size; ++i) {
    if (i & mask) continue;
    for (Eigen::Index j = 0; j < dim; ++j) in[j] = state[static_cast<Eigen::Index>(i | offsets[j])];
    for (Eigen::Index r = 0; r < dim; ++r) {
      cplx acc = 0.0;
      for (Eigen::Index c = 0; c < dim; ++c) acc += gate(r, c) * in[c];
      out[r] = acc;
    }
    for (Eigen::Index j = 0; j < dim; ++j) state[static_cast<Eigen::Index>(i | offsets[j])] = out[j];
  }
}

namespace {

CMat matrix_of(const GateIR& g) {
  if (!g.matrix.empty()) return g.matrix.to_eigen();
  return gate_matrix(g.name, g.params);
}

void check_size(int n, int limit, const char* what) {
  if (n > limit) {
    throw TooManyQubits(std::string(what) + " supports at most " + std::to_string(limit) +
                        " qubits, got " + std::to_string(n));
  }
}

// Amplitudes of `logical` (n qubits) placed on the wires named by `layout`
// of an m-wire register; every other wire is |0>.
CVec embed(const CVec& logical, int n, int m, const std::vector<int>& layout) {
  CVec out = CVec::Zero(Eigen::Index{1} << m);
  for (Eigen::Index x = 0; x < logical.size(); ++x) {
    std::size_t y = 0;
    for (int i = 0; i < n; ++i) {
      if ((static_cast<std::size_t>(x) >> i) & 1U) y |= std::size_t{1} << layout[static_cast<std::size_t>(i)];
    }
    out[static_cast<Eigen::Index>(y)] = logical[x];
  }
  return out;
}

std::vector<int> check_layout(std::vector<int> layout, int n, int m) {
  if (layout.empty()) {
    layout.resize(static_cast<std::size_t>(n));
    std::iota(layout.begin(), layout.end(), 0);
  }
  if (static_cast<int>(layout.size()) != n) {
    throw NotAPermutation("layout has " + std::to_string(layout.size()) +
                          " entries for " + std::to_string(n) + " qubits");
  }
  std::vector<char> used(static_cast<std::size_t>(m), 0);
  for (int w : layout) {
    if (w < 0 || w >= m || used[static_cast<std::size_t>(w)]) {
      throw NotAPermutation("layout is not injective into " + std::to_string(m) + " wires");
    }
    used[static_cast<std::size_t>(w)] = 1;
  }
  return layout;
}

}  // namespace

namespace {

// Candidate registers may exceed the public simulate() limit once routing
// has pulled ancilla wires in; callers check their own bound.
CVec run_gates(const Circuit& c, const std::optional<CVec>& initial) {
  if (c.has_mid_circuit_measurement()) {
    throw MidCircuitMeasurement("gate after measurement in " + c.source_name);
  }
  CVec state;
  if (initial) {
    if (initial->size() != (Eigen::Index{1} << c.num_qubits)) {
      throw DimensionMismatch("initial state size does not match qubit count");
    }
    state = *initial;
  } else {
    state = CVec::Zero(Eigen::Index{1} << c.num_qubits);
    state[0] = 1.0;
  }
  for (const GateIR& g : c.gates) {
    if (g.is_barrier()) continue;
    apply_gate(state, c.num_qubits, matrix_of(g), g.qubits);
  }
  return state;
}

// Several state vectors side by side, one per column. Row-major so that
// a gate touches contiguous rows.
using Batch = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

struct Step {
  CMat gate;
  std::vector<std::size_t> offsets;  // state offset of gate row j
  std::size_t mask = 0;
};

std::vector<Step> compile_steps(const Circuit& c) {
  if (c.has_mid_circuit_measurement()) {
    throw MidCircuitMeasurement("gate after measurement in " + c.source_name);
  }
  std::vector<Step> steps;
  steps.reserve(c.gates.size());
  for (const GateIR& g : c.gates) {
    if (g.is_barrier()) continue;
    Step st;
    st.gate = matrix_of(g);
    const int k = static_cast<int>(g.qubits.size());
    if (st.gate.rows() != (Eigen::Index{1} << k) || st.gate.cols() != st.gate.rows()) {
      throw DimensionMismatch("gate matrix does not match its qubit count");
    }
    st.offsets.assign(std::size_t{1} << k, 0);
    for (std::size_t j = 0; j < st.offsets.size(); ++j) {
      for (int b = 0; b < k; ++b) {
        if (j & (std::size_t{1} << (k - 1 - b))) st.offsets[j] |= std::size_t{1} << g.qubits[static_cast<std::size_t>(b)];
      }
    }
    for (int q : g.qubits) st.mask |= std::size_t{1} << q;
    steps.push_back(std::move(st));
  }
  return steps;
}

void run_steps(Batch& s, const std::vector<Step>& steps) {
  const auto size = static_cast<std::size_t>(s.rows());
  Batch in;
  Batch out;
  for (const Step& st : steps) {
    const auto dim = static_cast<Eigen::Index>(st.offsets.size());
    in.resize(dim, s.cols());
    out.resize(dim, s.cols());
    for (std::size_t i = 0; i < size; ++i) {
      if (i & st.mask) continue;
      for (Eigen::Index j = 0; j < dim; ++j) in.row(j) = s.row(static_cast<Eigen::Index>(i | st.offsets[static_cast<std::size_t>(j)]));
      out.noalias() = st.gate.lazyProduct(in);
      for (Eigen::Index j = 0; j < dim; ++j) s.row(static_cast<Eigen::Index>(i | st.offsets[static_cast<std::size_t>(j)])) = out.row(j);
    }
  }
}

}  // namespace

CVec simulate(const Circuit& c, const std::optional<CVec>& initial) {
  check_size(c.num_qubits, kMaxSimulatedQubits, "simulate");
  return run_gates(c, initial);
}

CMat circuit_unitary(const Circuit& c) {
  check_size(c.num_qubits, kMaxUnitaryQubits, "circuit_unitary");
  const Circuit bare = strip_measurements(c);
  const Eigen::Index dim = Eigen::Index{1} << c.num_qubits;
  CMat u(dim, dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    CVec e = CVec::Zero(dim);
    e[k] = 1.0;
    u.col(k) = simulate(bare, e);
  }
  return u;
}

EquivalenceResult equivalent(const Circuit& reference, const Circuit& candidate,
                             const EquivalenceOptions& opts) {
  const int n = reference.num_qubits;
  check_size(n, kMaxSimulatedQubits, "equivalent");
  if (candidate.num_qubits < n) {
    throw DimensionMismatch("candidate has fewer qubits than the reference");
  }
  auto init = check_layout(opts.initial_layout, n, candidate.num_qubits);
  auto fin = check_layout(opts.final_layout, n, candidate.num_qubits);
  const Circuit ref = strip_measurements(reference);
  Circuit cand = strip_measurements(candidate);

  // Idle device wires stay |0> and are dropped so that a small circuit
  // routed on a large device can still be simulated.
  // Kept wires are numbered in ascending order, so nothing moves when no
  // wire is idle.
  std::vector<char> used(static_cast<std::size_t>(cand.num_qubits), 0);
  for (int w : init) used[static_cast<std::size_t>(w)] = 1;
  for (int w : fin) used[static_cast<std::size_t>(w)] = 1;
  for (const auto& g : cand.gates) {
    for (int w : g.qubits) used[static_cast<std::size_t>(w)] = 1;
  }
  std::vector<int> compact(static_cast<std::size_t>(cand.num_qubits), -1);
  int m = 0;
  for (std::size_t w = 0; w < used.size(); ++w) {
    if (used[w]) compact[w] = m++;
  }
  check_size(m, kMaxEquivalenceWires, "equivalent");
  if (m != cand.num_qubits) {
    for (int& w : compact) {
      if (w < 0) w = 0;  // idle, never referenced
    }
    cand = relabel_qubits(cand, compact, m);
  }
  for (int& w : init) w = compact[static_cast<std::size_t>(w)];
  for (int& w : fin) w = compact[static_cast<std::size_t>(w)];

  const Eigen::Index ldim = Eigen::Index{1} << n;
  const Eigen::Index pdim = Eigen::Index{1} << m;
  std::vector<CVec> inputs;
  if (opts.random_states > 0) {
    std::mt19937_64 rng(opts.seed);
    std::normal_distribution<double> gauss;
    for (int s = 0; s < opts.random_states; ++s) {
      CVec v(ldim);
      for (Eigen::Index i = 0; i < ldim; ++i) v[i] = cplx(gauss(rng), gauss(rng));
      inputs.push_back(v.normalized());
    }
  } else {
    for (Eigen::Index k = 0; k < ldim; ++k) {
      CVec e = CVec::Zero(ldim);
      e[k] = 1.0;
      inputs.push_back(std::move(e));
    }
  }
  const std::vector<Step> ref_steps = compile_steps(ref);
  const std::vector<Step> cand_steps = compile_steps(cand);
  const auto total = static_cast<Eigen::Index>(inputs.size());
  CMat expect(pdim, total);
  CMat got(pdim, total);
  // Columns are evolved together, a chunk of about 4M amplitudes at a time.
  const Eigen::Index chunk = std::max<Eigen::Index>(1, (Eigen::Index{1} << 22) / pdim);
  for (Eigen::Index s0 = 0; s0 < total; s0 += chunk) {
    const Eigen::Index w = std::min(chunk, total - s0);
    Batch a(ldim, w);
    Batch b(pdim, w);
    for (Eigen::Index c = 0; c < w; ++c) {
      const CVec& in = inputs[static_cast<std::size_t>(s0 + c)];
      a.col(c) = in;
      b.col(c) = embed(in, n, m, init);
    }
    run_steps(a, ref_steps);
    run_steps(b, cand_steps);
    for (Eigen::Index c = 0; c < w; ++c) {
      expect.col(s0 + c) = embed(CVec(a.col(c)), n, m, fin);
      got.col(s0 + c) = b.col(c);
    }
  }
  EquivalenceResult r;
  r.max_deviation = phase_distance(expect, got);
  r.equivalent = r.max_deviation <= opts.tol;
  return r;
}

EquivalenceResult equivalent(const Circuit& reference, const Circuit& candidate,
                             const std::vector<int>& perm, double tol) {
  EquivalenceOptions o;
  o.initial_layout = perm;
  o.final_layout = perm;
  o.tol = tol;
  return equivalent(reference, candidate, o);
}

}  // namespace qasmtrans
