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

#include "szxc/instantiate.hpp"

#include "szxc/error.hpp"

namespace szxc {

namespace {

// Fuses instances of one body that share a node and wire layout.
ConcreteDiagram fuse(const std::vector<ConcreteDiagram>& parts) {
  const ConcreteDiagram& first = parts.front();
  for (const auto& p : parts) {
    bool same = p.wires.size() == first.wires.size() && p.nodes.size() == first.nodes.size() &&
                p.inputs == first.inputs && p.outputs == first.outputs;
    for (std::size_t i = 0; same && i < p.nodes.size(); ++i)
      same = p.nodes[i].kind == first.nodes[i].kind && p.nodes[i].ins == first.nodes[i].ins &&
             p.nodes[i].outs == first.nodes[i].outs;
    if (!same) throw DiagramError("box body does not have a uniform structure across its list");
  }

  ConcreteDiagram out;
  out.inputs = first.inputs;
  out.outputs = first.outputs;
  out.wires.assign(first.wires.size(), 0);
  for (const auto& p : parts)
    for (std::size_t w = 0; w < p.wires.size(); ++w) out.wires[w] += p.wires[w];

  for (std::size_t i = 0; i < first.nodes.size(); ++i) {
    ConcreteNode n = first.nodes[i];
    n.phases.clear();
    n.perm.clear();
    switch (n.kind) {
      case NodeKind::Z:
      case NodeKind::X:
        for (const auto& p : parts) n.phases.insert(n.phases.end(), p.nodes[i].phases.begin(), p.nodes[i].phases.end());
        out.nodes.push_back(std::move(n));
        break;
      case NodeKind::Perm:
        for (const auto& p : parts) n.perm = direct_sum(n.perm, p.nodes[i].perm);
        out.nodes.push_back(std::move(n));
        break;
      case NodeKind::Gather:
      case NodeKind::Split: {
        const bool gather = n.kind == NodeKind::Gather;
        const auto& legs = gather ? n.ins : n.outs;
        std::vector<std::vector<Nat>> sizes;
        for (const auto& p : parts) {
          std::vector<Nat> row;
          for (WireId w : legs) row.push_back(p.wires[w]);
          sizes.push_back(std::move(row));
        }
        // Element-major to part-major.
        Permutation sigma = build_interleave(sizes);
        WireId whole = gather ? n.outs[0] : n.ins[0];
        out.wires.push_back(out.wires[whole]);
        WireId mid = out.wires.size() - 1;
        ConcreteNode arrow;
        arrow.kind = NodeKind::Perm;
        if (gather) {
          n.outs[0] = mid;
          arrow.ins = {mid};
          arrow.outs = {whole};
          arrow.perm = inverse(sigma);
        } else {
          n.ins[0] = mid;
          arrow.ins = {whole};
          arrow.outs = {mid};
          arrow.perm = sigma;
        }
        out.nodes.push_back(std::move(n));
        out.nodes.push_back(std::move(arrow));
        break;
      }
      default:
        out.nodes.push_back(std::move(n));
        break;
    }
  }
  return out;
}

ConcreteDiagram inst(const Diagram& d, const NatEnv& env, bool empty);

ConcreteDiagram expand_box(const Box& box, const NatEnv& env, bool empty) {
  NatList list = empty ? NatList{} : nat_list_eval(box.list, env);
  std::vector<ConcreteDiagram> parts;
  if (list.empty()) {
    parts.push_back(inst(box.body, env, true));
  } else {
    for (Nat k : list) {
      NatEnv local = env;
      local[box.index] = k;
      parts.push_back(inst(box.body, local, false));
    }
  }
  return fuse(parts);
}

ConcreteDiagram inst(const Diagram& d, const NatEnv& env, bool empty) {
  ConcreteDiagram out;
  out.inputs = d.inputs;
  out.outputs = d.outputs;
  out.wires.reserve(d.wires.size());
  for (const auto& m : d.wires) out.wires.push_back(empty ? 0 : nat_eval(m, env));
  for (std::size_t i = 0; i < d.nodes.size(); ++i) {
    const Node& n = d.nodes[i];
    if (n.kind != NodeKind::Box) {
      ConcreteNode c;
      c.kind = n.kind;
      c.ins = n.ins;
      c.outs = n.outs;
      if (!empty) {
        if (n.kind == NodeKind::Z || n.kind == NodeKind::X) c.phases = eval(n.phases, env);
        if (n.kind == NodeKind::Perm) c.perm = n.perm.eval(env);
      }
      out.nodes.push_back(std::move(c));
      continue;
    }
    ConcreteDiagram body = expand_box(*n.box, env, empty);
    if (body.inputs.size() != n.ins.size() || body.outputs.size() != n.outs.size())
      throw DiagramError("box boundary arity differs from its body");
    // Embed: boundary wires of the body become the box's wires.
    std::vector<WireId> map(body.wires.size(), static_cast<WireId>(-1));
    auto bind = [&](WireId inner, WireId outer) {
      if (body.wires[inner] != out.wires[outer])
        throw DiagramError("box port carries " + std::to_string(body.wires[inner]) + " wires but is declared with " +
                           std::to_string(out.wires[outer]));
      if (map[inner] == static_cast<WireId>(-1)) {
        map[inner] = outer;
        return;
      }
      // A body wire from an input straight to an output.
      ConcreteNode wire;
      wire.kind = NodeKind::Wire;
      wire.ins = {map[inner]};
      wire.outs = {outer};
      out.nodes.push_back(std::move(wire));
    };
    for (std::size_t k = 0; k < n.ins.size(); ++k) bind(body.inputs[k], n.ins[k]);
    for (std::size_t k = 0; k < n.outs.size(); ++k) bind(body.outputs[k], n.outs[k]);
    for (std::size_t w = 0; w < body.wires.size(); ++w) {
      if (map[w] != static_cast<WireId>(-1)) continue;
      out.wires.push_back(body.wires[w]);
      map[w] = out.wires.size() - 1;
    }
    for (auto c : body.nodes) {
      for (auto& w : c.ins) w = map[w];
      for (auto& w : c.outs) w = map[w];
      out.nodes.push_back(std::move(c));
    }
  }
  return out;
}

}  // namespace

ConcreteDiagram instantiate(const Diagram& d, const NatEnv& env) {
  for (const auto& p : d.params)
    if (!env.count(p)) throw EnvironmentError("parameter '" + p + "' is not bound");
  ConcreteDiagram out = inst(d, env, false);
  out.validate();
  return out;
}

}  // namespace szxc
