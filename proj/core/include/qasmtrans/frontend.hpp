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

#include <string>
#include <string_view>
#include <vector>

#include "qasmtrans/circuit.hpp"

namespace qasmtrans {

enum class TokenKind { Keyword, Identifier, Number, Symbol, String };

struct Token {
  TokenKind kind;
  std::string text;
  int line;    // 1-based
  int column;  // 1-based
};

/// Splits OpenQASM 2.0 text into tokens. `//` comments are dropped; `->`
/// and `==` are single symbols; string tokens keep their quotes.
std::vector<Token> tokenize(std::string_view source);

struct ParseOptions {
  /// Replace qelib1 composition gates (cz .. c3sqrtx) by their library
  /// bodies, recursively, down to basic and standard gates.
  bool expand_composites = true;
  std::string source_name;
};

Circuit parse(const std::vector<Token>& tokens, const ParseOptions& opts = {});

/// tokenize + parse.
Circuit parse_qasm(std::string_view source, const ParseOptions& opts = {});

/// Reads and parses a file; the file name becomes `source_name`.
Circuit load_qasm_file(const std::string& path, ParseOptions opts = {});

/// Serializes with a single flattened `qreg q[n]` / `creg c[m]`, LF line
/// endings, and parameters printed with 17 significant digits.
std::string emit_qasm(const Circuit& circuit);

/// The embedded copy of the qelib1 composition-gate bodies.
std::string_view qelib1_source();

/// One level of qelib1 body substitution. Non-composite gates come back
/// unchanged as a single-element list.
std::vector<GateIR> expand_composite(const GateIR& gate);

/// Substitutes until no composition gate remains.
std::vector<GateIR> expand_composite_fully(const GateIR& gate);

/// Evaluates a parameter expression built from numbers, `pi`, + - * / ^,
/// unary minus and parentheses.
double eval_expression(std::string_view text);

}  // namespace qasmtrans
