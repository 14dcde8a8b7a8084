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

#include "szxc/simplify.hpp"

#include <numeric>

#include "szxc/error.hpp"

namespace szxc {

namespace {

constexpr std::size_t kBoundary = static_cast<std::size_t>(-1);

struct End {
  std::size_t node = kBoundary;  // kBoundary for the diagram boundary
  std::size_t port = 0;
};

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

// One round of rewriting. Rules are applied to disjoint sets of nodes; wires
// that pass straight through a deleted node are joined with a union-find and
// renumbered afterwards.
class Pass {
 public:
  explicit Pass(const ConcreteDiagram& d) : d_(d), uf_(d.wires.size()) {
    src_.assign(d.wires.size(), End{});
    tgt_.assign(d.wires.size(), End{});
    for (std::size_t i = 0; i < d.nodes.size(); ++i) {
      for (std::size_t p = 0; p < d.nodes[i].ins.size(); ++p) tgt_[d.nodes[i].ins[p]] = {i, p};
      for (std::size_t p = 0; p < d.nodes[i].outs.size(); ++p) src_[d.nodes[i].outs[p]] = {i, p};
    }
    dead_.assign(d.nodes.size(), false);
    used_.assign(d.nodes.size(), false);
  }

  bool zero_round() {
    auto& nodes = d_.nodes;
    auto is_terminator = [&](const ConcreteNode& n) {
      return (n.kind == NodeKind::Gather && n.ins.empty()) || (n.kind == NodeKind::Split && n.outs.empty());
    };
    auto boundary_terminator = [&](std::size_t i) {
      const auto& n = nodes[i];
      if (!is_terminator(n)) return false;
      WireId w = n.kind == NodeKind::Gather ? n.outs[0] : n.ins[0];
      return (n.kind == NodeKind::Gather ? tgt_[w] : src_[w]).node == kBoundary;
    };
    // Nodes all of whose legs carry nothing.
    std::vector<bool> empty(nodes.size(), false);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const auto& n = nodes[i];
      bool all_zero = true;
      for (WireId w : n.ins) all_zero = all_zero && d_.wires[w] == 0;
      for (WireId w : n.outs) all_zero = all_zero && d_.wires[w] == 0;
      if (!all_zero || boundary_terminator(i)) continue;
      if ((n.kind == NodeKind::Z || n.kind == NodeKind::X) && !n.phases.empty()) continue;
      empty[i] = true;
    }
    bool changed = false;
    // A swap with one empty side is a wire on the other side.
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      auto& n = nodes[i];
      if (n.kind != NodeKind::Swap || empty[i]) continue;
      for (std::size_t side = 0; side < 2; ++side) {
        if (d_.wires[n.ins[side]] != 0) continue;
        WireId a = n.ins[side], a2 = n.outs[1 - side];
        WireId b = n.ins[1 - side], b2 = n.outs[side];
        n = ConcreteNode{NodeKind::Wire, {b}, {b2}, {}, {}};
        extra_.push_back(ConcreteNode{NodeKind::Split, {a}, {}, {}, {}});
        extra_.push_back(ConcreteNode{NodeKind::Gather, {}, {a2}, {}, {}});
        changed = true;
        break;
      }
    }
    if (changed) return true;

    std::vector<std::vector<WireId>> drop_ins(nodes.size()), drop_outs(nodes.size());
    for (WireId w = 0; w < d_.wires.size(); ++w) {
      if (d_.wires[w] != 0) continue;
      End s = src_[w], t = tgt_[w];
      bool s_empty = s.node != kBoundary && empty[s.node];
      bool t_empty = t.node != kBoundary && empty[t.node];
      bool s_leg = s.node != kBoundary && !s_empty && nodes[s.node].kind == NodeKind::Split;
      bool t_leg = t.node != kBoundary && !t_empty && nodes[t.node].kind == NodeKind::Gather;
      bool s_go = s_empty || s_leg, t_go = t_empty || t_leg;
      if (s_go && t_go) {
        if (s_leg) drop_outs[s.node].push_back(w);
        if (t_leg) drop_ins[t.node].push_back(w);
        changed = true;
      } else if (s_empty) {
        extra_.push_back(ConcreteNode{NodeKind::Gather, {}, {w}, {}, {}});
        changed = true;
      } else if (t_empty) {
        extra_.push_back(ConcreteNode{NodeKind::Split, {w}, {}, {}, {}});
        changed = true;
      }
    }
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (empty[i]) {
        dead_[i] = true;
        changed = true;
        continue;
      }
      auto erase = [](std::vector<WireId>& v, const std::vector<WireId>& gone) {
        std::vector<WireId> keep;
        for (WireId w : v)
          if (std::find(gone.begin(), gone.end(), w) == gone.end()) keep.push_back(w);
        v = std::move(keep);
      };
      erase(nodes[i].ins, drop_ins[i]);
      erase(nodes[i].outs, drop_outs[i]);
    }
    return changed;
  }

  bool structural_round() {
    auto& nodes = d_.nodes;
    bool changed = false;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (used_[i]) continue;
      auto& n = nodes[i];
      auto claim = [&](std::size_t j) {
        used_[i] = true;
        used_[j] = true;
        changed = true;
      };
      auto pass_through = [&]() {
        dead_[i] = true;
        used_[i] = true;
        uf_.unite(n.ins[0], n.outs[0]);
        changed = true;
      };
      switch (n.kind) {
        case NodeKind::Wire:
          pass_through();
          break;
        case NodeKind::Perm: {
          if (is_identity(n.perm)) {
            pass_through();
            break;
          }
          std::size_t j = tgt_[n.outs[0]].node;
          if (j != kBoundary && j != i && !used_[j] && nodes[j].kind == NodeKind::Perm) {
            nodes[j].perm = then(n.perm, nodes[j].perm);
            nodes[j].ins = n.ins;
            dead_[i] = true;
            claim(j);
          }
          break;
        }
        case NodeKind::Gather: {
          if (n.ins.size() == 1) {
            pass_through();
            break;
          }
          End t = tgt_[n.outs[0]];
          if (t.node == kBoundary || t.node == i || used_[t.node]) break;
          auto& m = nodes[t.node];
          if (m.kind == NodeKind::Gather) {
            std::vector<WireId> ins(m.ins.begin(), m.ins.begin() + static_cast<std::ptrdiff_t>(t.port));
            ins.insert(ins.end(), n.ins.begin(), n.ins.end());
            ins.insert(ins.end(), m.ins.begin() + static_cast<std::ptrdiff_t>(t.port) + 1, m.ins.end());
            m.ins = std::move(ins);
            dead_[i] = true;
            claim(t.node);
          } else if (m.kind == NodeKind::Split && same_parts(n.ins, m.outs)) {
            for (std::size_t k = 0; k < n.ins.size(); ++k) uf_.unite(n.ins[k], m.outs[k]);
            dead_[i] = true;
            dead_[t.node] = true;
            claim(t.node);
          }
          break;
        }
        case NodeKind::Split: {
          if (n.outs.size() == 1) {
            pass_through();
            break;
          }
          End s = src_[n.ins[0]];
          if (s.node != kBoundary && s.node != i && !used_[s.node] && nodes[s.node].kind == NodeKind::Split) {
            auto& m = nodes[s.node];
            std::vector<WireId> outs(m.outs.begin(), m.outs.begin() + static_cast<std::ptrdiff_t>(s.port));
            outs.insert(outs.end(), n.outs.begin(), n.outs.end());
            outs.insert(outs.end(), m.outs.begin() + static_cast<std::ptrdiff_t>(s.port) + 1, m.outs.end());
            m.outs = std::move(outs);
            dead_[i] = true;
            claim(s.node);
            break;
          }
          // (sg): every part goes, in order, into one gather.
          if (n.outs.empty()) break;
          std::size_t j = tgt_[n.outs[0]].node;
          if (j == kBoundary || j == i || used_[j] || nodes[j].kind != NodeKind::Gather || nodes[j].ins != n.outs)
            break;
          uf_.unite(n.ins[0], nodes[j].outs[0]);
          dead_[i] = true;
          dead_[j] = true;
          claim(j);
          break;
        }
        default:
          break;
      }
    }
    return changed;
  }

  ConcreteDiagram finish() {
    ConcreteDiagram out;
    std::vector<ConcreteNode> nodes;
    for (std::size_t i = 0; i < d_.nodes.size(); ++i)
      if (!dead_[i]) nodes.push_back(d_.nodes[i]);
    for (auto& n : extra_) nodes.push_back(n);
    // Renumber wire classes that still have endpoints.
    std::vector<WireId> id(d_.wires.size(), kBoundary);
    auto wire = [&](WireId w) {
      std::size_t r = uf_.find(w);
      if (id[r] == kBoundary) {
        out.wires.push_back(d_.wires[w]);
        id[r] = out.wires.size() - 1;
      }
      return id[r];
    };
    for (WireId w : d_.inputs) out.inputs.push_back(wire(w));
    for (WireId w : d_.outputs) out.outputs.push_back(wire(w));
    for (auto& n : nodes) {
      for (auto& w : n.ins) w = wire(w);
      for (auto& w : n.outs) w = wire(w);
    }
    out.nodes = std::move(nodes);
    return out;
  }

 private:
  bool same_parts(const std::vector<WireId>& a, const std::vector<WireId>& b) const {
    if (a.size() != b.size()) return false;
    for (std::size_t k = 0; k < a.size(); ++k)
      if (d_.wires[a[k]] != d_.wires[b[k]]) return false;
    return true;
  }

  ConcreteDiagram d_;
  UnionFind uf_;
  std::vector<End> src_, tgt_;
  std::vector<bool> dead_, used_;
  std::vector<ConcreteNode> extra_;
};

}  // namespace

ConcreteDiagram simplify(const ConcreteDiagram& d, SimplifyStats* stats) {
  ConcreteDiagram cur = d;
  SimplifyStats local;
  SimplifyStats& st = stats ? *stats : local;
  st.rounds = 0;
  // Each productive round removes at least one node that is not a boundary
  // terminator; the bound is a guard against a rule bug.
  for (std::size_t round = 0; round <= 4 * (d.nodes.size() + d.wires.size()) + 8; ++round) {
    Pass zero(cur);
    if (zero.zero_round()) {
      cur = zero.finish();
      ++st.rounds;
      continue;
    }
    Pass rest(cur);
    if (!rest.structural_round()) return cur;
    cur = rest.finish();
    ++st.rounds;
  }
  throw DiagramError("simplifier did not reach a fixed point");
}

}  // namespace szxc
