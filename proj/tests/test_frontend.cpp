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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "qasmtrans/errors.hpp"
#include "qasmtrans/frontend.hpp"
#include "qasmtrans/gates.hpp"
#include "qasmtrans/ir.hpp"
#include "qasmtrans/oracle.hpp"
#include "support.hpp"

namespace qasmtrans {
namespace {

using testing::fixture;
using testing::fixture_names;

constexpr const char* kHeader = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";

void expect_same_gates(const Circuit& a, const Circuit& b) {
  ASSERT_EQ(a.num_qubits, b.num_qubits);
  ASSERT_EQ(a.gates.size(), b.gates.size());
  for (std::size_t i = 0; i < a.gates.size(); ++i) {
    EXPECT_EQ(a.gates[i].name, b.gates[i].name) << "gate " << i;
    EXPECT_EQ(a.gates[i].qubits, b.gates[i].qubits) << "gate " << i;
    ASSERT_EQ(a.gates[i].params.size(), b.gates[i].params.size());
    for (std::size_t k = 0; k < a.gates[i].params.size(); ++k) {
      EXPECT_NEAR(a.gates[i].params[k], b.gates[i].params[k], 1e-12);
    }
  }
  ASSERT_EQ(a.measurements.size(), b.measurements.size());
  for (std::size_t i = 0; i < a.measurements.size(); ++i) {
    EXPECT_EQ(a.measurements[i].qubit, b.measurements[i].qubit);
    EXPECT_EQ(a.measurements[i].clbit, b.measurements[i].clbit);
  }
}

Circuit random_circuit_for_emit(std::mt19937_64& rng) { return testing::random_circuit(4, 30, rng); }

TEST(Tokenize, EmptyInput) { EXPECT_TRUE(tokenize("").empty()); }

TEST(Tokenize, GateStatement) {
  const auto t = tokenize("cx q[0],q[1];");
  const std::vector<std::string> texts{"cx", "q", "[", "0", "]", ",", "q", "[", "1", "]", ";"};
  ASSERT_EQ(t.size(), texts.size());
  for (std::size_t i = 0; i < t.size(); ++i) EXPECT_EQ(t[i].text, texts[i]);
  EXPECT_EQ(t[0].kind, TokenKind::Identifier);
  EXPECT_EQ(t[1].kind, TokenKind::Identifier);
  EXPECT_EQ(t[2].kind, TokenKind::Symbol);
  EXPECT_EQ(t[3].kind, TokenKind::Number);
  EXPECT_EQ(t[10].kind, TokenKind::Symbol);
  for (const auto& tok : t) EXPECT_EQ(tok.line, 1);
  EXPECT_EQ(t[0].column, 1);
  EXPECT_EQ(t[1].column, 4);
}

TEST(Tokenize, CommentsDropped) {
  const auto t = tokenize("OPENQASM 2.0;\n// note\nqreg q[2];");
  for (const auto& tok : t) {
    EXPECT_NE(tok.line, 2);
    EXPECT_NE(tok.text, "note");
  }
  ASSERT_EQ(t.size(), 9u);
  EXPECT_EQ(t[0].kind, TokenKind::Keyword);
  EXPECT_EQ(t[1].text, "2.0");
  EXPECT_EQ(t[3].text, "qreg");
  EXPECT_EQ(t[3].line, 3);
}

TEST(Tokenize, PositionsMonotone) {
  const std::string src = testing::read_file(testing::circuit_path("adder_n4"));
  const auto t = tokenize(src);
  for (std::size_t i = 1; i < t.size(); ++i) {
    EXPECT_TRUE(t[i].line > t[i - 1].line ||
                (t[i].line == t[i - 1].line && t[i].column > t[i - 1].column));
  }
}

TEST(Tokenize, ArrowAndEqualsAreSingleSymbols) {
  const auto t = tokenize("measure q -> c; if(c==1)");
  EXPECT_EQ(t[2].text, "->");
  EXPECT_EQ(t[7].text, "c");
  EXPECT_EQ(t[8].text, "==");
}

TEST(Tokenize, IllegalCharacter) {
  try {
    tokenize("qreg q[1];\nh q[0]; @");
    FAIL() << "expected IllegalCharacter";
  } catch (const IllegalCharacter& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 9);
  }
}

TEST(Parse, SingleGate) {
  const Circuit c = parse_qasm(std::string(kHeader) + "qreg q[1]; h q[0];");
  EXPECT_EQ(c.num_qubits, 1);
  ASSERT_EQ(c.gates.size(), 1u);
  EXPECT_EQ(c.gates[0].name, "h");
  EXPECT_EQ(c.gates[0].qubits, std::vector<int>{0});
}

TEST(Parse, RegisterFlattening) {
  const Circuit c = parse_qasm(std::string(kHeader) + "qreg a[2]; qreg b[3]; cx a[1],b[2];");
  EXPECT_EQ(c.num_qubits, 5);
  ASSERT_EQ(c.gates.size(), 1u);
  EXPECT_EQ(c.gates[0].qubits, (std::vector<int>{1, 4}));
}

TEST(Parse, FlatteningProperty) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const int k = 1 + static_cast<int>(rng() % 5);
    std::vector<int> sizes;
    std::string src = kHeader;
    for (int r = 0; r < k; ++r) {
      sizes.push_back(1 + static_cast<int>(rng() % 4));
      src += "qreg r" + std::to_string(r) + "[" + std::to_string(sizes.back()) + "];\n";
    }
    std::vector<int> expect;
    int offset = 0;
    for (int r = 0; r < k; ++r) {
      for (int i = 0; i < sizes[static_cast<std::size_t>(r)]; ++i) {
        src += "x r" + std::to_string(r) + "[" + std::to_string(i) + "];\n";
        expect.push_back(offset + i);
      }
      offset += sizes[static_cast<std::size_t>(r)];
    }
    const Circuit c = parse_qasm(src);
    ASSERT_EQ(c.num_qubits, offset);
    ASSERT_EQ(c.gates.size(), expect.size());
    for (std::size_t g = 0; g < expect.size(); ++g) EXPECT_EQ(c.gates[g].qubits[0], expect[g]);
    const auto& regs = c.register_map.qregs();
    int prefix = 0;
    for (std::size_t r = 0; r < regs.size(); ++r) {
      EXPECT_EQ(regs[r].offset, prefix);
      prefix += regs[r].size;
    }
  }
}

TEST(Parse, BroadcastAscending) {
  const Circuit c = parse_qasm(std::string(kHeader) + "qreg q[3]; qreg r[3]; h q; cx q,r;");
  ASSERT_EQ(c.gates.size(), 6u);
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(c.gates[static_cast<std::size_t>(i)].qubits[0], i);
    EXPECT_EQ(c.gates[static_cast<std::size_t>(3 + i)].qubits, (std::vector<int>{i, 3 + i}));
  }
}

TEST(Parse, MeasureMapping) {
  const Circuit c = parse_qasm(std::string(kHeader) +
                               "qreg q[2]; creg a[1]; creg b[2]; measure q -> b; measure q[0] -> a[0];");
  ASSERT_EQ(c.measurements.size(), 3u);
  EXPECT_EQ(c.measurements[0].qubit, 0);
  EXPECT_EQ(c.measurements[0].clbit, 1);
  EXPECT_EQ(c.measurements[1].clbit, 2);
  EXPECT_EQ(c.measurements[2].clbit, 0);
}

TEST(Parse, ParameterExpressions) {
  const Circuit c =
      parse_qasm(std::string(kHeader) + "qreg q[1]; rz(-pi/2) q[0]; u3(2*pi/3, pi^2 - 1, -(0.5+0.25)) q[0];");
  EXPECT_DOUBLE_EQ(c.gates[0].params[0], -kPi / 2);
  EXPECT_DOUBLE_EQ(c.gates[1].params[0], 2 * kPi / 3);
  EXPECT_DOUBLE_EQ(c.gates[1].params[1], kPi * kPi - 1);
  EXPECT_DOUBLE_EQ(c.gates[1].params[2], -0.75);
  EXPECT_DOUBLE_EQ(eval_expression("1 + 2 * 3"), 7.0);
  EXPECT_DOUBLE_EQ(eval_expression("2^3^2"), 512.0);
}

TEST(Parse, BarrierPreserved) {
  const Circuit c = parse_qasm(std::string(kHeader) + "qreg q[3]; h q[0]; barrier q[0],q[2]; barrier q;");
  ASSERT_EQ(c.gates.size(), 3u);
  EXPECT_TRUE(c.gates[1].is_barrier());
  EXPECT_EQ(c.gates[1].qubits, (std::vector<int>{0, 2}));
  EXPECT_EQ(c.gates[2].qubits, (std::vector<int>{0, 1, 2}));
}

TEST(Parse, Errors) {
  const std::string h = kHeader;
  EXPECT_THROW(parse_qasm("qreg q[1];"), SyntaxError);
  EXPECT_THROW(parse_qasm(h + "qreg q[1]; foo q[0];"), UnknownGate);
  EXPECT_THROW(parse_qasm(h + "qreg q[2]; cx q[0];"), ArityMismatch);
  EXPECT_THROW(parse_qasm(h + "qreg q[1]; rz q[0];"), ArityMismatch);
  EXPECT_THROW(parse_qasm(h + "qreg q[1]; h r[0];"), UndeclaredRegister);
  EXPECT_THROW(parse_qasm(h + "qreg q[1]; creg c[1]; if(c==1) x q[0];"), UnsupportedStatement);
  EXPECT_THROW(parse_qasm(h + "opaque g q;"), UnsupportedStatement);
  EXPECT_THROW(parse_qasm(h + "gate g a { x a; }"), UnsupportedStatement);
  EXPECT_THROW(parse_qasm(h + "qreg q[5]; c4x q[0],q[1],q[2],q[3],q[4];"), UnsupportedGate);
  EXPECT_THROW(parse_qasm(h + "qreg q[1]; h q[1];"), SyntaxError);
  EXPECT_THROW(parse_qasm(h + "qreg q[1] h q[0];"), SyntaxError);
}

TEST(Parse, MatricesUnitary) {
  for (const auto& name : fixture_names()) {
    for (const GateIR& g : fixture(name).gates) {
      if (g.is_barrier()) continue;
      EXPECT_LT(unitarity_error(g.matrix.to_eigen()), 1e-10) << name << " " << g.name;
    }
  }
}

// Each composition gate's qelib1 body must realize its closed-form matrix.
TEST(Parse, CompositeExpansionMatchesDefinition) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> a(-kPi, kPi);
  for (const GateSpec& spec : gate_table()) {
    if (spec.kind != GateKind::Composite) continue;
    std::vector<double> params;
    for (int i = 0; i < spec.num_params; ++i) params.push_back(a(rng));
    std::vector<int> qubits;
    for (int i = 0; i < spec.num_qubits; ++i) qubits.push_back(i);
    const std::string name(spec.name);
    Circuit body = Circuit::with_qubits(spec.num_qubits);
    for (const GateIR& g : expand_composite_fully(make_gate(name, qubits, params))) body.add(g);
    Circuit ref = Circuit::with_qubits(spec.num_qubits);
    ref.add(make_gate(name, qubits, params));
    for (const GateIR& g : body.gates) {
      const GateSpec* s = find_gate(g.name);
      ASSERT_NE(s, nullptr);
      EXPECT_NE(s->kind, GateKind::Composite) << name << " left " << g.name;
    }
    EXPECT_LT(phase_distance(circuit_unitary(ref), circuit_unitary(body)), 1e-9) << name;
  }
}

TEST(Emit, SingleHadamard) {
  Circuit c = Circuit::with_qubits(1);
  c.add("h", {0});
  const std::string text = emit_qasm(c);
  EXPECT_EQ(text.rfind("OPENQASM 2.0;\ninclude \"qelib1.inc\";\n", 0), 0u);
  std::size_t count = 0;
  for (std::size_t p = text.find("h q[0];"); p != std::string::npos; p = text.find("h q[0];", p + 1)) {
    ++count;
  }
  EXPECT_EQ(count, 1u);
  EXPECT_EQ(text.find('\r'), std::string::npos);
}

TEST(Emit, ParameterPrecision) {
  Circuit c = Circuit::with_qubits(3);
  c.add("rz", {2}, {0.5});
  c.add("rx", {1}, {0.1234567890123456789});
  const std::string text = emit_qasm(c);
  EXPECT_NE(text.find("rz(0.5) q[2];"), std::string::npos);
  const Circuit back = parse_qasm(text);
  EXPECT_EQ(back.gates[1].params[0], c.gates[1].params[0]);
}

TEST(Emit, RoundTripFixtures) {
  for (const auto& name : fixture_names()) {
    const Circuit a = fixture(name);
    const Circuit b = parse_qasm(emit_qasm(a));
    SCOPED_TRACE(name);
    expect_same_gates(a, b);
  }
}

TEST(Emit, RoundTripRandom) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    // Composite names survive only when the parser leaves them unexpanded.
    const Circuit a = random_circuit_for_emit(rng);
    ParseOptions keep;
    keep.expand_composites = false;
    expect_same_gates(a, parse_qasm(emit_qasm(a), keep));
  }
}

TEST(Emit, VendorGatesAreBareNames) {
  Circuit c = Circuit::with_qubits(2);
  c.add("gpi2", {0}, {0.25});
  c.add("ms", {0, 1}, {0.0, 0.5});
  c.add("zz", {0, 1});
  const Circuit back = parse_qasm(emit_qasm(c));
  expect_same_gates(c, back);
}

TEST(Emit, UnserializableGate) {
  Circuit c = Circuit::with_qubits(1);
  GateIR g;
  g.name = "mystery";
  g.qubits = {0};
  c.gates.push_back(g);
  EXPECT_THROW(emit_qasm(c), UnserializableGate);
}

}  // namespace
}  // namespace qasmtrans
