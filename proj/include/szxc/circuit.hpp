// Copyright 2026 The szxc Authors
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

#include <cstddef>
#include <string>
#include <vector>

#include "szxc/oracle.hpp"
#include "szxc/parser.hpp"
#include "szxc/phase.hpp"
#include "szxc/term.hpp"

namespace szxc {

struct Instruction {
  enum class Op { Gate, Allocate, Decohere, Discard };
  Op op = Op::Gate;
  /// Gate name: H, CNOT, Rz, RzInv, Rx, RxInv.
  std::string name;
  /// Effective rotation angle as a fraction of a full turn; the inverse gates
  /// carry the negated angle, so RzInv @4 records 3/4.
  Rational angle;
  std::vector<std::size_t> wires;
  /// Allocate only: the classical value the wire starts in.
  bool bit = false;

  std::string to_string() const;
  friend bool operator==(const Instruction& a, const Instruction& b) {
    return a.op == b.op && a.name == b.name && a.angle == b.angle && a.wires == b.wires && a.bit == b.bit;
  }
};

/// A straight-line circuit. Wires 0..inputs-1 are the inputs; others are
/// allocated by instructions. `outputs` lists the live wires in result order.
struct Circuit {
  std::size_t inputs = 0;
  std::size_t wires = 0;
  std::vector<Instruction> ops;
  std::vector<std::size_t> outputs;

  std::string to_string() const;
};

/// 2^q × 2^q matrix of a gate; wire order is most significant first.
Eigen::MatrixXcd gate_matrix(const std::string& name, const Rational& angle);

/// Reduces `entry` applied to `params` (bound to its leading parameter
/// abstractions by name) and then to fresh qubit tokens for each state
/// argument, recording every gate, measurement and preparation the reducer
/// meets. Throws EvalError when the result is higher-order or the reduction
/// gets stuck.
Circuit circuit_extract(const Term& entry, const NatEnv& params,
                        RotationConvention conv = RotationConvention::TwoPiOverM);

/// Composes gate superoperators left to right. Wires missing from the
/// outputs are traced out.
CPMap simulate_circuit(const Circuit& c, const OracleOptions& opts = {});

}  // namespace szxc
