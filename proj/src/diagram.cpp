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

#include "szxc/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "szxc/detail/overloaded.hpp"
#include "szxc/error.hpp"
#include "szxc/nat_normalize.hpp"

namespace szxc {

std::string node_kind_name(NodeKind k) {
  switch (k) {
    case NodeKind::Z: return "Z";
    case NodeKind::X: return "X";
    case NodeKind::Hadamard: return "H";
    case NodeKind::Ground: return "ground";
    case NodeKind::Cup: return "cup";
    case NodeKind::Cap: return "cap";
    case NodeKind::Swap: return "swap";
    case NodeKind::Gather: return "gather";
    case NodeKind::Split: return "split";
    case NodeKind::Perm: return "perm";
    case NodeKind::Wire: return "wire";
    case NodeKind::Box: return "box";
  }
  return "?";
}

// ---- permutation specs ----

Permutation PermSpec::eval(const NatEnv& env) const {
  return std::visit(
      detail::overloaded{
          [](const Explicit& e) { return e.map; },
          [&](const Sigma& s) {
            NatList ns = nat_list_eval(s.list, env);
            auto at = [&](const NatExpr& f) {
              return [&, f](Nat x) {
                NatEnv local = env;
                local[s.var] = x;
                return nat_eval(f, local);
              };
            };
            return build_sigma(ns, at(s.v), at(s.w));
          },
          [&](const Tau& t) {
            return build_tau(nat_eval(t.n, env), nat_eval(t.a, env), nat_eval(t.b, env), nat_eval(t.c, env));
          },
      },
      spec);
}

PermSpec PermSpec::substitute(const std::string& name, const NatExpr& value) const {
  return std::visit(
      detail::overloaded{
          [&](const Explicit& e) { return PermSpec{e}; },
          [&](const Sigma& s) {
            if (s.var == name) return PermSpec{Sigma{szxc::substitute(s.list, name, value), s.var, s.v, s.w}};
            return PermSpec{Sigma{szxc::substitute(s.list, name, value), s.var, szxc::substitute(s.v, name, value),
                                  szxc::substitute(s.w, name, value)}};
          },
          [&](const Tau& t) {
            return PermSpec{Tau{szxc::substitute(t.n, name, value), szxc::substitute(t.a, name, value),
                                szxc::substitute(t.b, name, value), szxc::substitute(t.c, name, value)}};
          },
      },
      spec);
}

std::string PermSpec::to_string() const {
  return std::visit(detail::overloaded{
                        [](const Explicit& e) {
                          std::string s = "[";
                          for (std::size_t i = 0; i < e.map.size(); ++i) s += (i ? "," : "") + std::to_string(e.map[i]);
                          return s + "]";
                        },
                        [](const Sigma& s) {
                          return "sigma(" + s.list.to_string() + ", " + s.var + " -> " + s.v.to_string() + ", " +
                                 s.var + " -> " + s.w.to_string() + ")";
                        },
                        [](const Tau& t) {
                          return "tau(" + t.n.to_string() + ", " + t.a.to_string() + ", " + t.b.to_string() + ", " +
                                 t.c.to_string() + ")";
                        },
                    },
                    spec);
}

// ---- family builders ----

WireId Diagram::add_wire(NatExpr mult) {
  wires.push_back(std::move(mult));
  return wires.size() - 1;
}

std::size_t Diagram::add_node(Node node) {
  nodes.push_back(std::move(node));
  return nodes.size() - 1;
}

std::vector<WireId> Diagram::add(NodeKind kind, std::vector<WireId> ins, const std::vector<NatExpr>& out_mults,
                                 PhaseVec phases) {
  Node n;
  n.kind = kind;
  n.ins = std::move(ins);
  for (const auto& m : out_mults) n.outs.push_back(add_wire(m));
  n.phases = std::move(phases);
  std::vector<WireId> outs = n.outs;
  add_node(std::move(n));
  return outs;
}

WireId Diagram::gather(const std::vector<WireId>& parts) {
  NatExpr total(Nat{0});
  for (std::size_t i = 0; i < parts.size(); ++i) total = i ? total + wires[parts[i]] : wires[parts[i]];
  return gather(parts, total);
}

WireId Diagram::gather(const std::vector<WireId>& parts, NatExpr total) {
  return add(NodeKind::Gather, parts, {std::move(total)}).front();
}

std::vector<WireId> Diagram::split(WireId w, const std::vector<NatExpr>& parts) {
  return add(NodeKind::Split, {w}, parts);
}

void Diagram::terminate(WireId w) { add(NodeKind::Split, {w}, {}); }

WireId Diagram::empty_source() { return gather({}, NatExpr(Nat{0})); }

std::string Diagram::summary() const {
  return std::to_string(nodes.size()) + " nodes, " + std::to_string(wires.size()) + " wires, " +
         std::to_string(inputs.size()) + " inputs, " + std::to_string(outputs.size()) + " outputs";
}

// ---- composition ----

namespace {

std::vector<std::string> merge_params(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  for (const auto& p : b)
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  return out;
}

constexpr WireId kUnused = static_cast<WireId>(-1);

template <typename D, typename Same>
D compose_impl(const D& a, const D& b, Same same) {
  if (a.outputs.size() != b.inputs.size())
    throw DiagramError("cannot compose: " + std::to_string(a.outputs.size()) + " outputs against " +
                       std::to_string(b.inputs.size()) + " inputs");
  for (std::size_t i = 0; i < a.outputs.size(); ++i)
    if (!same(a.wires[a.outputs[i]], b.wires[b.inputs[i]]))
      throw DiagramError("cannot compose: multiplicity mismatch at boundary position " + std::to_string(i));
  D out = a;
  const std::size_t offset = a.wires.size();
  out.wires.insert(out.wires.end(), b.wires.begin(), b.wires.end());
  auto map = [&](WireId w) {
    for (std::size_t i = 0; i < b.inputs.size(); ++i)
      if (b.inputs[i] == w) return a.outputs[i];
    return w + offset;
  };
  for (auto n : b.nodes) {
    for (auto& w : n.ins) w = map(w);
    for (auto& w : n.outs) w = map(w);
    out.nodes.push_back(std::move(n));
  }
  out.outputs.clear();
  for (WireId w : b.outputs) out.outputs.push_back(map(w));
  // b's input wires were merged into a's outputs; drop their slots.
  std::vector<WireId> id(out.wires.size(), kUnused);
  decltype(out.wires) wires;
  auto renumber = [&](WireId& w) {
    if (id[w] == kUnused) {
      id[w] = wires.size();
      wires.push_back(out.wires[w]);
    }
    w = id[w];
  };
  for (auto& w : out.inputs) renumber(w);
  for (auto& n : out.nodes) {
    for (auto& w : n.ins) renumber(w);
    for (auto& w : n.outs) renumber(w);
  }
  for (auto& w : out.outputs) renumber(w);
  out.wires = std::move(wires);
  return out;
}

template <typename D>
D tensor_impl(const D& a, const D& b) {
  D out = a;
  const std::size_t offset = a.wires.size();
  out.wires.insert(out.wires.end(), b.wires.begin(), b.wires.end());
  for (auto n : b.nodes) {
    for (auto& w : n.ins) w += offset;
    for (auto& w : n.outs) w += offset;
    out.nodes.push_back(std::move(n));
  }
  for (WireId w : b.inputs) out.inputs.push_back(w + offset);
  for (WireId w : b.outputs) out.outputs.push_back(w + offset);
  return out;
}

}  // namespace

Diagram compose(const Diagram& a, const Diagram& b) {
  Diagram out = compose_impl(a, b, [](const NatExpr& x, const NatExpr& y) { return nat_equal(x, y); });
  out.params = merge_params(a.params, b.params);
  return out;
}

Diagram tensor(const Diagram& a, const Diagram& b) {
  Diagram out = tensor_impl(a, b);
  out.params = merge_params(a.params, b.params);
  return out;
}

ConcreteDiagram compose(const ConcreteDiagram& a, const ConcreteDiagram& b) {
  return compose_impl(a, b, [](Nat x, Nat y) { return x == y; });
}

ConcreteDiagram tensor(const ConcreteDiagram& a, const ConcreteDiagram& b) { return tensor_impl(a, b); }

Diagram identity(const std::vector<NatExpr>& mults) {
  Diagram d;
  for (const auto& m : mults) {
    WireId w = d.add_wire(m);
    d.inputs.push_back(w);
    d.outputs.push_back(w);
  }
  return d;
}

std::size_t node_count(const Diagram& d) {
  std::size_t n = 0;
  for (const auto& node : d.nodes) {
    if (node.kind == NodeKind::Box)
      n += node_count(node.box->body);
    else if (node.kind != NodeKind::Wire)
      ++n;
  }
  return n;
}

std::size_t node_count(const ConcreteDiagram& d) {
  return static_cast<std::size_t>(
      std::count_if(d.nodes.begin(), d.nodes.end(), [](const ConcreteNode& n) { return n.kind != NodeKind::Wire; }));
}

// ---- concrete diagrams ----

Nat ConcreteDiagram::input_width() const {
  Nat n = 0;
  for (WireId w : inputs) n += wires.at(w);
  return n;
}

Nat ConcreteDiagram::output_width() const {
  Nat n = 0;
  for (WireId w : outputs) n += wires.at(w);
  return n;
}

void ConcreteDiagram::validate() const {
  std::vector<int> sources(wires.size(), 0), targets(wires.size(), 0);
  auto check_id = [&](WireId w) {
    if (w >= wires.size()) throw DiagramError("wire id " + std::to_string(w) + " out of range");
  };
  for (WireId w : inputs) check_id(w), ++sources[w];
  for (WireId w : outputs) check_id(w), ++targets[w];
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto& n = nodes[i];
    auto where = [&] { return node_kind_name(n.kind) + " node " + std::to_string(i); };
    auto fail = [&](const std::string& why) { throw DiagramError(where() + ": " + why); };
    for (WireId w : n.ins) check_id(w), ++targets[w];
    for (WireId w : n.outs) check_id(w), ++sources[w];
    auto arity = [&](std::size_t in, std::size_t out) {
      if (n.ins.size() != in || n.outs.size() != out) fail("wrong number of ports");
    };
    auto all_equal = [&](Nat m) {
      for (WireId w : n.ins)
        if (wires[w] != m) fail("leg multiplicity " + std::to_string(wires[w]) + " differs from " + std::to_string(m));
      for (WireId w : n.outs)
        if (wires[w] != m) fail("leg multiplicity " + std::to_string(wires[w]) + " differs from " + std::to_string(m));
    };
    auto sum = [&](const std::vector<WireId>& ws) {
      Nat s = 0;
      for (WireId w : ws) s += wires[w];
      return s;
    };
    switch (n.kind) {
      case NodeKind::Z:
      case NodeKind::X:
        all_equal(n.phases.size());
        break;
      case NodeKind::Hadamard:
      case NodeKind::Wire:
        arity(1, 1);
        all_equal(wires[n.ins[0]]);
        break;
      case NodeKind::Ground:
        arity(1, 0);
        break;
      case NodeKind::Cup:
        arity(0, 2);
        all_equal(wires[n.outs[0]]);
        break;
      case NodeKind::Cap:
        arity(2, 0);
        all_equal(wires[n.ins[0]]);
        break;
      case NodeKind::Swap:
        arity(2, 2);
        if (wires[n.ins[0]] != wires[n.outs[1]] || wires[n.ins[1]] != wires[n.outs[0]]) fail("swap legs mismatch");
        break;
      case NodeKind::Gather:
        if (n.outs.size() != 1) fail("gather has one output");
        if (sum(n.ins) != wires[n.outs[0]]) fail("parts do not add up to the gathered register");
        break;
      case NodeKind::Split:
        if (n.ins.size() != 1) fail("split has one input");
        if (sum(n.outs) != wires[n.ins[0]]) fail("parts do not add up to the split register");
        break;
      case NodeKind::Perm:
        arity(1, 1);
        all_equal(n.perm.size());
        if (!is_permutation(n.perm)) fail("not a bijection");
        break;
      case NodeKind::Box:
        fail("boxes cannot appear in a concrete diagram");
    }
  }
  for (std::size_t w = 0; w < wires.size(); ++w) {
    if (sources[w] != 1 || targets[w] != 1)
      throw DiagramError("wire " + std::to_string(w) + " has " + std::to_string(sources[w]) + " sources and " +
                         std::to_string(targets[w]) + " targets");
  }
}

ConcreteDiagram concrete_spider(NodeKind kind, std::vector<Nat> ins, std::vector<Nat> outs,
                                std::vector<Rational> phases) {
  ConcreteDiagram d = concrete_generator(kind, std::move(ins), std::move(outs));
  d.nodes[0].phases = std::move(phases);
  return d;
}

ConcreteDiagram concrete_generator(NodeKind kind, std::vector<Nat> ins, std::vector<Nat> outs, Permutation perm) {
  ConcreteDiagram d;
  ConcreteNode n;
  n.kind = kind;
  for (Nat m : ins) {
    d.wires.push_back(m);
    d.inputs.push_back(d.wires.size() - 1);
    n.ins.push_back(d.wires.size() - 1);
  }
  for (Nat m : outs) {
    d.wires.push_back(m);
    d.outputs.push_back(d.wires.size() - 1);
    n.outs.push_back(d.wires.size() - 1);
  }
  n.perm = std::move(perm);
  d.nodes.push_back(std::move(n));
  return d;
}

}  // namespace szxc
