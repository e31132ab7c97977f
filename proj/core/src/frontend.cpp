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

#include "qasmtrans/frontend.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "qasmtrans/errors.hpp"
#include "qasmtrans/gates.hpp"

namespace qasmtrans {

namespace {

const std::set<std::string, std::less<>> kKeywords = {
    "OPENQASM", "include", "qreg",    "creg",  "gate", "opaque",
    "if",       "measure", "barrier", "reset", "pi"};

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_';
}
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}
bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Composition gate bodies, in qelib1.inc syntax.
constexpr std::string_view kQelib1 = R"(// qelib1.inc composition gates
gate cz a,b { h b; cx a,b; h b; }
gate cy a,b { sdg b; cx a,b; s b; }
gate swap a,b { cx a,b; cx b,a; cx a,b; }
gate ch a,b {
  h b; sdg b;
  cx a,b;
  h b; t b;
  cx a,b;
  t b; h b; s b; x b; s a;
}
gate ccx a,b,c {
  h c;
  cx b,c; tdg c;
  cx a,c; t c;
  cx b,c; tdg c;
  cx a,c; t b; t c; h c;
  cx a,b; t a; tdg b;
  cx a,b;
}
gate cswap a,b,c { cx c,b; ccx a,b,c; cx c,b; }
gate crx(lambda) a,b {
  u1(pi/2) b;
  cx a,b;
  u3(-lambda/2,0,0) b;
  cx a,b;
  u3(lambda/2,-pi/2,0) b;
}
gate cry(lambda) a,b { ry(lambda/2) b; cx a,b; ry(-lambda/2) b; cx a,b; }
gate crz(lambda) a,b { rz(lambda/2) b; cx a,b; rz(-lambda/2) b; cx a,b; }
gate cu1(lambda) a,b {
  u1(lambda/2) a;
  cx a,b;
  u1(-lambda/2) b;
  cx a,b;
  u1(lambda/2) b;
}
gate cu3(theta,phi,lambda) c,t {
  u1((lambda+phi)/2) c;
  u1((lambda-phi)/2) t;
  cx c,t;
  u3(-theta/2,0,-(phi+lambda)/2) t;
  cx c,t;
  u3(theta/2,phi,0) t;
}
gate rxx(theta) a,b {
  u3(pi/2,theta,0) a;
  h b;
  cx a,b;
  u1(-theta) b;
  cx a,b;
  h b;
  u2(-pi,pi-theta) a;
}
gate rzz(theta) a,b { cx a,b; u1(theta) b; cx a,b; }
gate rccx a,b,c {
  u2(0,pi) c;
  u1(pi/4) c;
  cx b,c;
  u1(-pi/4) c;
  cx a,c;
  u1(pi/4) c;
  cx b,c;
  u1(-pi/4) c;
  u2(0,pi) c;
}
gate rc3x a,b,c,d {
  u2(0,pi) d;
  u1(pi/4) d;
  cx c,d;
  u1(-pi/4) d;
  u2(0,pi) d;
  cx a,d;
  u1(pi/4) d;
  cx b,d;
  u1(-pi/4) d;
  cx a,d;
  u1(pi/4) d;
  cx b,d;
  u1(-pi/4) d;
  u2(0,pi) d;
  u1(pi/4) d;
  cx c,d;
  u1(-pi/4) d;
  u2(0,pi) d;
}
gate c3x a,b,c,d {
  h d; cu1(-pi/4) a,d; h d;
  cx a,b;
  h d; cu1(pi/4) b,d; h d;
  cx a,b;
  h d; cu1(-pi/4) b,d; h d;
  cx b,c;
  h d; cu1(pi/4) c,d; h d;
  cx a,c;
  h d; cu1(-pi/4) c,d; h d;
  cx b,c;
  h d; cu1(pi/4) c,d; h d;
  cx a,c;
  h d; cu1(-pi/4) c,d; h d;
}
gate c3sqrtx a,b,c,d {
  h d; cu1(pi/8) a,d; h d;
  cx a,b;
  h d; cu1(-pi/8) b,d; h d;
  cx a,b;
  h d; cu1(pi/8) b,d; h d;
  cx b,c;
  h d; cu1(-pi/8) c,d; h d;
  cx a,c;
  h d; cu1(pi/8) c,d; h d;
  cx b,c;
  h d; cu1(-pi/8) c,d; h d;
  cx a,c;
  h d; cu1(pi/8) c,d; h d;
}
)";

using Env = std::map<std::string, double, std::less<>>;

// Recursive-descent cursor shared by the program parser and the library
// loader.
class Cursor {
 public:
  explicit Cursor(const std::vector<Token>& toks) : toks_(toks) {}

  bool done() const { return pos_ >= toks_.size(); }
  std::size_t pos() const { return pos_; }

  const Token& peek() const {
    if (done()) throw SyntaxError(last_line(), "unexpected end of input");
    return toks_[pos_];
  }
  bool peek_is(std::string_view text) const {
    return !done() && toks_[pos_].text == text &&
           toks_[pos_].kind != TokenKind::String;
  }
  const Token& next() {
    const Token& t = peek();
    ++pos_;
    return t;
  }
  const Token& expect(std::string_view text) {
    const Token& t = peek();
    if (t.text != text || t.kind == TokenKind::String) {
      throw SyntaxError(t.line, "expected '" + std::string(text) + "', found '" +
                                    t.text + "'");
    }
    ++pos_;
    return t;
  }
  bool accept(std::string_view text) {
    if (peek_is(text)) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::string identifier() {
    const Token& t = peek();
    if (t.kind != TokenKind::Identifier) {
      throw SyntaxError(t.line, "expected identifier, found '" + t.text + "'");
    }
    ++pos_;
    return t.text;
  }
  int integer() {
    const Token& t = peek();
    if (t.kind != TokenKind::Number ||
        t.text.find_first_not_of("0123456789") != std::string::npos) {
      throw SyntaxError(t.line, "expected integer, found '" + t.text + "'");
    }
    ++pos_;
    return std::stoi(t.text);
  }
  int last_line() const { return toks_.empty() ? 1 : toks_.back().line; }

  // expr := term (('+'|'-') term)*
  double expression(const Env& env) {
    double v = term(env);
    while (peek_is("+") || peek_is("-")) {
      const bool plus = next().text == "+";
      const double r = term(env);
      v = plus ? v + r : v - r;
    }
    return v;
  }

 private:
  double term(const Env& env) {
    double v = unary(env);
    while (peek_is("*") || peek_is("/")) {
      const bool mul = next().text == "*";
      const double r = unary(env);
      v = mul ? v * r : v / r;
    }
    return v;
  }
  double unary(const Env& env) {
    if (accept("-")) return -unary(env);
    if (accept("+")) return unary(env);
    const double base = primary(env);
    if (accept("^")) return std::pow(base, unary(env));
    return base;
  }
  double primary(const Env& env) {
    const Token& t = next();
    if (t.kind == TokenKind::Number) return std::stod(t.text);
    if (t.text == "pi") return kPi;
    if (t.text == "(") {
      const double v = expression(env);
      expect(")");
      return v;
    }
    if (t.kind == TokenKind::Identifier) {
      auto it = env.find(t.text);
      if (it != env.end()) return it->second;
      throw SyntaxError(t.line, "unknown identifier '" + t.text +
                                    "' in parameter expression");
    }
    throw SyntaxError(t.line, "unexpected '" + t.text + "' in expression");
  }

  const std::vector<Token>& toks_;
  std::size_t pos_ = 0;
};

struct BodyStatement {
  std::string gate;
  std::vector<std::vector<Token>> param_exprs;
  std::vector<int> args;  // indices into the definition's formal qubits
};

struct Definition {
  std::vector<std::string> params;
  std::vector<std::string> qargs;
  std::vector<BodyStatement> body;
};

// Reads the token range of one parameter expression (up to a top-level ','
// or the closing ')').
std::vector<Token> take_expression_tokens(Cursor& cur) {
  std::vector<Token> out;
  int depth = 0;
  while (true) {
    const Token& t = cur.peek();
    if (depth == 0 && (t.text == "," || t.text == ")")) break;
    if (t.text == "(") ++depth;
    if (t.text == ")") --depth;
    out.push_back(cur.next());
  }
  return out;
}

double eval_tokens(const std::vector<Token>& toks, const Env& env) {
  Cursor c(toks);
  const double v = c.expression(env);
  if (!c.done()) throw SyntaxError(c.peek().line, "trailing tokens in expression");
  return v;
}

std::map<std::string, Definition, std::less<>> load_library() {
  std::map<std::string, Definition, std::less<>> lib;
  const auto toks = tokenize(kQelib1);
  Cursor cur(toks);
  while (!cur.done()) {
    cur.expect("gate");
    const std::string name = cur.identifier();
    Definition def;
    if (cur.accept("(")) {
      if (!cur.peek_is(")")) {
        do def.params.push_back(cur.identifier());
        while (cur.accept(","));
      }
      cur.expect(")");
    }
    do def.qargs.push_back(cur.identifier());
    while (cur.accept(","));
    cur.expect("{");
    while (!cur.accept("}")) {
      BodyStatement st;
      st.gate = cur.identifier();
      if (cur.accept("(")) {
        if (!cur.peek_is(")")) {
          do st.param_exprs.push_back(take_expression_tokens(cur));
          while (cur.accept(","));
        }
        cur.expect(")");
      }
      do {
        const std::string a = cur.identifier();
        int idx = -1;
        for (std::size_t k = 0; k < def.qargs.size(); ++k) {
          if (def.qargs[k] == a) idx = static_cast<int>(k);
        }
        if (idx < 0) throw InternalError("bad qelib1 body argument " + a);
        st.args.push_back(idx);
      } while (cur.accept(","));
      cur.expect(";");
      def.body.push_back(std::move(st));
    }
    lib.emplace(name, std::move(def));
  }
  return lib;
}

const std::map<std::string, Definition, std::less<>>& library() {
  static const auto lib = load_library();
  return lib;
}

std::string format_param(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// One argument of a gate or measure statement: a whole register or a single
// indexed element.
struct Operand {
  Register reg;
  int index = -1;  // -1 = whole register
};

class ProgramParser {
 public:
  ProgramParser(const std::vector<Token>& toks, const ParseOptions& opts)
      : cur_(toks), opts_(opts) {}

  Circuit run() {
    header();
    while (!cur_.done()) statement();
    circuit_.num_qubits = circuit_.register_map.total_qubits();
    circuit_.num_clbits = circuit_.register_map.total_clbits();
    circuit_.source_name = opts_.source_name;
    return std::move(circuit_);
  }

 private:
  void header() {
    if (cur_.done()) throw SyntaxError(1, "empty program");
    const Token& t = cur_.peek();
    if (t.text != "OPENQASM") {
      throw SyntaxError(t.line, "program must begin with 'OPENQASM 2.0;'");
    }
    cur_.next();
    const Token& v = cur_.next();
    if (v.kind != TokenKind::Number || std::stod(v.text) != 2.0) {
      throw SyntaxError(v.line, "only OpenQASM 2.0 is supported");
    }
    cur_.expect(";");
  }

  void statement() {
    const Token& t = cur_.peek();
    const std::string& w = t.text;
    if (t.kind == TokenKind::Keyword) {
      if (w == "include") return include();
      if (w == "qreg" || w == "creg") return declaration();
      if (w == "measure") return measure();
      if (w == "barrier") return barrier();
      if (w == "if" || w == "opaque" || w == "gate" || w == "reset") {
        throw UnsupportedStatement("'" + w + "' at line " +
                                   std::to_string(t.line));
      }
      throw SyntaxError(t.line, "unexpected keyword '" + w + "'");
    }
    if (t.kind == TokenKind::Identifier) return gate_application();
    throw SyntaxError(t.line, "unexpected '" + w + "'");
  }

  void include() {
    cur_.next();
    const Token& f = cur_.next();
    if (f.kind != TokenKind::String) throw SyntaxError(f.line, "expected file name");
    if (f.text != "\"qelib1.inc\"") throw UnsupportedStatement("include " + f.text);
    cur_.expect(";");
  }

  void declaration() {
    const bool quantum = cur_.next().text == "qreg";
    const int line = cur_.peek().line;
    const std::string name = cur_.identifier();
    cur_.expect("[");
    const int size = cur_.integer();
    cur_.expect("]");
    cur_.expect(";");
    auto& rm = circuit_.register_map;
    if (rm.find_qreg(name) || rm.find_creg(name)) {
      throw SyntaxError(line, "register '" + name + "' declared twice");
    }
    if (size <= 0) throw SyntaxError(line, "register size must be positive");
    if (quantum) {
      rm.add_qreg(name, size);
    } else {
      rm.add_creg(name, size);
    }
  }

  Operand operand(bool quantum) {
    const int line = cur_.peek().line;
    const std::string name = cur_.identifier();
    const auto& rm = circuit_.register_map;
    auto reg = quantum ? rm.find_qreg(name) : rm.find_creg(name);
    if (!reg) throw UndeclaredRegister(name);
    Operand op{*reg, -1};
    if (cur_.accept("[")) {
      op.index = cur_.integer();
      cur_.expect("]");
      if (op.index >= reg->size) {
        throw SyntaxError(line, "index " + std::to_string(op.index) +
                                    " out of range for register '" + name + "'");
      }
    }
    return op;
  }

  // Expands whole-register operands element-wise in ascending order.
  std::vector<std::vector<int>> broadcast(const std::vector<Operand>& ops,
                                          int line) {
    int width = 1;
    bool any_whole = false;
    for (const auto& op : ops) {
      if (op.index >= 0) continue;
      if (any_whole && op.reg.size != width) {
        throw ArityMismatch("register size mismatch at line " +
                            std::to_string(line));
      }
      width = op.reg.size;
      any_whole = true;
    }
    std::vector<std::vector<int>> rows;
    for (int k = 0; k < width; ++k) {
      std::vector<int> row;
      for (const auto& op : ops) {
        row.push_back(op.reg.offset + (op.index >= 0 ? op.index : k));
      }
      rows.push_back(std::move(row));
    }
    return rows;
  }

  void measure() {
    const int line = cur_.next().line;
    const Operand q = operand(true);
    cur_.expect("->");
    const Operand c = operand(false);
    cur_.expect(";");
    const int qn = q.index >= 0 ? 1 : q.reg.size;
    const int cn = c.index >= 0 ? 1 : c.reg.size;
    if (qn != cn) {
      throw ArityMismatch("measure size mismatch at line " + std::to_string(line));
    }
    for (int k = 0; k < qn; ++k) {
      const int qubit = q.reg.offset + (q.index >= 0 ? q.index : k);
      const int clbit = c.reg.offset + (c.index >= 0 ? c.index : k);
      if (!used_clbits_.insert(clbit).second) {
        throw ArityMismatch("classical bit " + std::to_string(clbit) +
                            " is measured twice");
      }
      circuit_.measurements.push_back(
          {qubit, clbit, static_cast<int>(circuit_.gates.size())});
    }
  }

  void barrier() {
    cur_.next();
    std::vector<int> qubits;
    do {
      const Operand op = operand(true);
      if (op.index >= 0) {
        qubits.push_back(op.reg.offset + op.index);
      } else {
        for (int k = 0; k < op.reg.size; ++k) qubits.push_back(op.reg.offset + k);
      }
    } while (cur_.accept(","));
    cur_.expect(";");
    circuit_.gates.push_back(make_barrier(std::move(qubits)));
  }

  void gate_application() {
    const Token& head = cur_.next();
    std::string name = head.text;
    if (name == "U") name = "u3";
    if (name == "CX") name = "cx";
    const GateSpec* spec = find_gate(name);
    if (spec == nullptr || spec->kind == GateKind::Directive) throw UnknownGate(name);
    if (spec->kind == GateKind::Unsupported) throw UnsupportedGate(name);
    std::vector<double> params;
    if (cur_.accept("(")) {
      if (!cur_.peek_is(")")) {
        do params.push_back(cur_.expression({}));
        while (cur_.accept(","));
      }
      cur_.expect(")");
    }
    std::vector<Operand> ops;
    do ops.push_back(operand(true));
    while (cur_.accept(","));
    cur_.expect(";");
    if (static_cast<int>(ops.size()) != spec->num_qubits) {
      throw ArityMismatch("gate " + name + " takes " +
                          std::to_string(spec->num_qubits) + " qubits, line " +
                          std::to_string(head.line));
    }
    if (static_cast<int>(params.size()) != spec->num_params) {
      throw ArityMismatch("gate " + name + " takes " +
                          std::to_string(spec->num_params) +
                          " parameters, line " + std::to_string(head.line));
    }
    for (auto& qubits : broadcast(ops, head.line)) {
      GateIR g = make_gate(name, std::move(qubits), params);
      if (opts_.expand_composites && spec->kind == GateKind::Composite) {
        for (auto& e : expand_composite_fully(g)) circuit_.gates.push_back(std::move(e));
      } else {
        circuit_.gates.push_back(std::move(g));
      }
    }
  }

  Cursor cur_;
  const ParseOptions& opts_;
  Circuit circuit_;
  std::set<int> used_clbits_;
};

}  // namespace

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    if (c == '/' && i + 1 < src.size() && src[i + 1] == '/') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    const int tl = line, tc = col;
    std::size_t j = i;
    TokenKind kind;
    if (is_ident_start(c)) {
      while (j < src.size() && is_ident_char(src[j])) ++j;
      const std::string_view word = src.substr(i, j - i);
      kind = kKeywords.count(word) ? TokenKind::Keyword : TokenKind::Identifier;
    } else if (is_digit(c) || (c == '.' && i + 1 < src.size() && is_digit(src[i + 1]))) {
      while (j < src.size() && is_digit(src[j])) ++j;
      if (j < src.size() && src[j] == '.') {
        ++j;
        while (j < src.size() && is_digit(src[j])) ++j;
      }
      if (j < src.size() && (src[j] == 'e' || src[j] == 'E')) {
        std::size_t k = j + 1;
        if (k < src.size() && (src[k] == '+' || src[k] == '-')) ++k;
        if (k < src.size() && is_digit(src[k])) {
          j = k;
          while (j < src.size() && is_digit(src[j])) ++j;
        }
      }
      kind = TokenKind::Number;
    } else if (c == '"') {
      ++j;
      while (j < src.size() && src[j] != '"' && src[j] != '\n') ++j;
      if (j >= src.size() || src[j] != '"') throw IllegalCharacter(tl, tc);
      ++j;
      kind = TokenKind::String;
    } else if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') {
      j += 2;
      kind = TokenKind::Symbol;
    } else if (c == '=' && i + 1 < src.size() && src[i + 1] == '=') {
      j += 2;
      kind = TokenKind::Symbol;
    } else if (std::string_view(";,[](){}+-*/^").find(c) != std::string_view::npos) {
      j += 1;
      kind = TokenKind::Symbol;
    } else {
      throw IllegalCharacter(tl, tc);
    }
    out.push_back({kind, std::string(src.substr(i, j - i)), tl, tc});
    advance(j - i);
  }
  return out;
}

Circuit parse(const std::vector<Token>& tokens, const ParseOptions& opts) {
  return ProgramParser(tokens, opts).run();
}

Circuit parse_qasm(std::string_view source, const ParseOptions& opts) {
  return parse(tokenize(source), opts);
}

Circuit load_qasm_file(const std::string& path, ParseOptions opts) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  if (opts.source_name.empty()) opts.source_name = path;
  return parse_qasm(ss.str(), opts);
}

std::string emit_qasm(const Circuit& c) {
  std::string out = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
  out += "qreg q[" + std::to_string(c.num_qubits) + "];\n";
  if (c.num_clbits > 0) out += "creg c[" + std::to_string(c.num_clbits) + "];\n";
  for (const auto& g : c.gates) {
    const GateSpec* spec = find_gate(g.name);
    if (spec == nullptr || spec->kind == GateKind::Unsupported) {
      throw UnserializableGate(g.name);
    }
    out += g.name;
    if (!g.params.empty()) {
      out += '(';
      for (std::size_t k = 0; k < g.params.size(); ++k) {
        if (k) out += ',';
        out += format_param(g.params[k]);
      }
      out += ')';
    }
    out += ' ';
    for (std::size_t k = 0; k < g.qubits.size(); ++k) {
      if (k) out += ',';
      out += "q[" + std::to_string(g.qubits[k]) + "]";
    }
    out += ";\n";
  }
  for (const auto& m : c.measurements) {
    out += "measure q[" + std::to_string(m.qubit) + "] -> c[" +
           std::to_string(m.clbit) + "];\n";
  }
  return out;
}

std::string_view qelib1_source() { return kQelib1; }

std::vector<GateIR> expand_composite(const GateIR& gate) {
  const auto& lib = library();
  auto it = lib.find(gate.name);
  if (it == lib.end()) return {gate};
  const Definition& def = it->second;
  Env env;
  for (std::size_t k = 0; k < def.params.size(); ++k) {
    env[def.params[k]] = gate.params.at(k);
  }
  std::vector<GateIR> out;
  out.reserve(def.body.size());
  for (const auto& st : def.body) {
    std::vector<double> p;
    for (const auto& e : st.param_exprs) p.push_back(eval_tokens(e, env));
    std::vector<int> qs;
    for (int a : st.args) qs.push_back(gate.qubits.at(static_cast<std::size_t>(a)));
    out.push_back(make_gate(st.gate, std::move(qs), std::move(p)));
  }
  return out;
}

std::vector<GateIR> expand_composite_fully(const GateIR& gate) {
  std::vector<GateIR> out;
  for (auto& g : expand_composite(gate)) {
    const GateSpec* spec = find_gate(g.name);
    if (spec && spec->kind == GateKind::Composite && g.name != gate.name) {
      for (auto& h : expand_composite_fully(g)) out.push_back(std::move(h));
    } else {
      out.push_back(std::move(g));
    }
  }
  return out;
}

double eval_expression(std::string_view text) {
  return eval_tokens(tokenize(text), {});
}

}  // namespace qasmtrans
