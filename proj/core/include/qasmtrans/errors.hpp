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

#include <stdexcept>
#include <string>

namespace qasmtrans {

/// Broad failure class; the CLI maps each one to an exit code.
enum class ErrorCategory { Parse = 1, Device = 2, Routing = 3, Internal = 4 };

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& what)
      : std::runtime_error(what), category_(category) {}
  ErrorCategory category() const noexcept { return category_; }

 private:
  ErrorCategory category_;
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what)
      : Error(ErrorCategory::Parse, what) {}
};

class DeviceError : public Error {
 public:
  explicit DeviceError(const std::string& what)
      : Error(ErrorCategory::Device, what) {}
};

class RoutingError : public Error {
 public:
  explicit RoutingError(const std::string& what)
      : Error(ErrorCategory::Routing, what) {}
};

class InternalError : public Error {
 public:
  explicit InternalError(const std::string& what)
      : Error(ErrorCategory::Internal, what) {}
};

// Frontend.

class IllegalCharacter : public ParseError {
 public:
  IllegalCharacter(int line, int column)
      : ParseError("illegal character at " + std::to_string(line) + ":" +
                   std::to_string(column)),
        line_(line),
        column_(column) {}
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

class SyntaxError : public ParseError {
 public:
  SyntaxError(int line, const std::string& msg)
      : ParseError("syntax error at line " + std::to_string(line) + ": " + msg),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

class UnknownGate : public ParseError {
 public:
  explicit UnknownGate(const std::string& name)
      : ParseError("unknown gate: " + name), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class ArityMismatch : public ParseError {
 public:
  explicit ArityMismatch(const std::string& what) : ParseError(what) {}
};

class UndeclaredRegister : public ParseError {
 public:
  explicit UndeclaredRegister(const std::string& name)
      : ParseError("undeclared register: " + name) {}
};

class UnsupportedStatement : public ParseError {
 public:
  explicit UnsupportedStatement(const std::string& what)
      : ParseError("unsupported statement: " + what) {}
};

class UnserializableGate : public ParseError {
 public:
  explicit UnserializableGate(const std::string& name)
      : ParseError("gate has no textual form: " + name) {}
};

class UnsupportedGate : public ParseError {
 public:
  explicit UnsupportedGate(const std::string& name)
      : ParseError("unsupported gate: " + name) {}
};

// Device.

class SchemaError : public DeviceError {
 public:
  explicit SchemaError(const std::string& field)
      : DeviceError("device schema error at " + field), field_(field) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

class Infeasible : public DeviceError {
 public:
  explicit Infeasible(const std::string& what) : DeviceError(what) {}
};

class IsolatedQubit : public DeviceError {
 public:
  explicit IsolatedQubit(int q)
      : DeviceError("qubit " + std::to_string(q) + " has no neighbours") {}
};

// Routing, placement and partitioning.

class TooManyQubits : public RoutingError {
 public:
  explicit TooManyQubits(const std::string& what) : RoutingError(what) {}
};

class Disconnected : public RoutingError {
 public:
  explicit Disconnected(const std::string& what) : RoutingError(what) {}
};

class NotAPermutation : public RoutingError {
 public:
  explicit NotAPermutation(const std::string& what) : RoutingError(what) {}
};

class NoEmbedding : public RoutingError {
 public:
  explicit NoEmbedding(const std::string& what) : RoutingError(what) {}
};

class TooManyQubitsRequested : public RoutingError {
 public:
  explicit TooManyQubitsRequested(const std::string& what)
      : RoutingError(what) {}
};

class GrowthStuck : public RoutingError {
 public:
  explicit GrowthStuck(const std::string& what) : RoutingError(what) {}
};

class Timeout : public RoutingError {
 public:
  explicit Timeout(const std::string& what) : RoutingError(what) {}
};

// Everything else is an internal invariant or configuration failure.

class NotInFront : public InternalError {
 public:
  explicit NotInFront(int node)
      : InternalError("node " + std::to_string(node) + " is not in the front"),
        node_(node) {}
  int node() const noexcept { return node_; }

 private:
  int node_;
};

class NoRuleFor : public InternalError {
 public:
  NoRuleFor(const std::string& gate, const std::string& basis)
      : InternalError("no rule lowers " + gate + " into basis " + basis) {}
};

class MissingDuration : public InternalError {
 public:
  explicit MissingDuration(const std::string& gate)
      : InternalError("no duration for gate " + gate) {}
};

class MissingTemplate : public InternalError {
 public:
  explicit MissingTemplate(const std::string& what)
      : InternalError("no pulse template for " + what) {}
};

class DimensionMismatch : public InternalError {
 public:
  explicit DimensionMismatch(const std::string& what) : InternalError(what) {}
};

class MidCircuitMeasurement : public InternalError {
 public:
  explicit MidCircuitMeasurement(const std::string& what)
      : InternalError(what) {}
};

class StepTooLarge : public InternalError {
 public:
  explicit StepTooLarge(const std::string& what) : InternalError(what) {}
};

class DidNotConverge : public InternalError {
 public:
  explicit DidNotConverge(double best)
      : InternalError("optimizer stopped at fidelity " + std::to_string(best)),
        best_(best) {}
  double best_fidelity() const noexcept { return best_; }

 private:
  double best_;
};

}  // namespace qasmtrans
