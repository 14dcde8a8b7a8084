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
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "szxc/nat_expr.hpp"
#include "szxc/permutation.hpp"
#include "szxc/phase.hpp"

namespace szxc {

using WireId = std::size_t;

struct Box;

/// Split is stored as a Gather with the opposite orientation: Gather has many
/// inputs and one output, Split one input and many outputs.
enum class NodeKind { Z, X, Hadamard, Ground, Cup, Cap, Swap, Gather, Split, Perm, Wire, Box };

std::string node_kind_name(NodeKind k);

/// Permutation arrow, explicit or produced by a named builder.
struct PermSpec {
  struct Explicit {
    Permutation map;
  };
  /// build_sigma over the list, with v and w functions of `var`.
  struct Sigma {
    NatListExpr list;
    std::string var;
    NatExpr v;
    NatExpr w;
  };
  struct Tau {
    NatExpr n, a, b, c;
  };
  std::variant<Explicit, Sigma, Tau> spec;

  Permutation eval(const NatEnv& env) const;
  PermSpec substitute(const std::string& name, const NatExpr& value) const;
  std::string to_string() const;
};

/// A generator or list-instantiation box. Port multiplicities live on the
/// wires; a spider's size is the length of its phase vector.
struct Node {
  NodeKind kind = NodeKind::Wire;
  std::vector<WireId> ins;
  std::vector<WireId> outs;
  PhaseVec phases;
  PermSpec perm{PermSpec::Explicit{}};
  /// Box only: the body's boundary matches ins/outs position by position.
  std::shared_ptr<const Box> box;
};

/// A diagram family. Multiplicities and phases may mention the parameters and
/// the indices of enclosing boxes. Every wire has exactly one source (a
/// diagram input or a node output) and one target (a diagram output or a node
/// input); cycles are allowed.
struct Diagram {
  std::vector<std::string> params;
  std::vector<NatExpr> wires;
  std::vector<Node> nodes;
  std::vector<WireId> inputs;
  std::vector<WireId> outputs;

  WireId add_wire(NatExpr mult);
  std::size_t add_node(Node node);
  /// Adds a node with fresh output wires of the given multiplicities and
  /// returns those wires.
  std::vector<WireId> add(NodeKind kind, std::vector<WireId> ins, const std::vector<NatExpr>& out_mults,
                          PhaseVec phases = {});

  /// Single-wire helpers for the translator.
  WireId gather(const std::vector<WireId>& parts);
  WireId gather(const std::vector<WireId>& parts, NatExpr total);
  std::vector<WireId> split(WireId w, const std::vector<NatExpr>& parts);
  void terminate(WireId w);
  WireId empty_source();

  std::string summary() const;
};

struct Box {
  std::string index;
  NatListExpr list;
  Diagram body;
};

/// A fully evaluated diagram: natural multiplicities, rational phases and no
/// boxes.
struct ConcreteNode {
  NodeKind kind = NodeKind::Wire;
  std::vector<WireId> ins;
  std::vector<WireId> outs;
  std::vector<Rational> phases;
  Permutation perm;
};

struct ConcreteDiagram {
  std::vector<Nat> wires;
  std::vector<ConcreteNode> nodes;
  std::vector<WireId> inputs;
  std::vector<WireId> outputs;

  Nat input_width() const;
  Nat output_width() const;
  /// Checks port arities, multiplicities and the one-source/one-target rule.
  /// Throws DiagramError.
  void validate() const;
};

/// Sequential composition: outputs of a feed inputs of b. Multiplicities are
/// compared after normalization. Throws DiagramError on a boundary mismatch.
Diagram compose(const Diagram& a, const Diagram& b);
Diagram tensor(const Diagram& a, const Diagram& b);
ConcreteDiagram compose(const ConcreteDiagram& a, const ConcreteDiagram& b);
ConcreteDiagram tensor(const ConcreteDiagram& a, const ConcreteDiagram& b);

/// Identity on registers of the given multiplicities.
Diagram identity(const std::vector<NatExpr>& mults);

/// Number of generator nodes other than plain wires. Boxes count with their
/// bodies.
std::size_t node_count(const Diagram& d);
std::size_t node_count(const ConcreteDiagram& d);

/// Single-generator concrete diagrams, mostly for tests.
ConcreteDiagram concrete_spider(NodeKind kind, std::vector<Nat> ins, std::vector<Nat> outs,
                                std::vector<Rational> phases);
ConcreteDiagram concrete_generator(NodeKind kind, std::vector<Nat> ins, std::vector<Nat> outs,
                                   Permutation perm = {});

}  // namespace szxc
