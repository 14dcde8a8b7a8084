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

#include "szxc/diagram_io.hpp"

#include <sstream>
#include <type_traits>
#include <utility>

namespace szxc {

namespace {

using nlohmann::json;

struct Port {
  long id = 0;
  std::size_t port = 0;
};

// Source and target port of every wire.
template <typename D>
std::pair<std::vector<Port>, std::vector<Port>> endpoints(const D& d) {
  std::vector<Port> src(d.wires.size()), dst(d.wires.size());
  for (std::size_t i = 0; i < d.inputs.size(); ++i) src[d.inputs[i]] = {-1, i};
  for (std::size_t i = 0; i < d.outputs.size(); ++i) dst[d.outputs[i]] = {-2, i};
  for (std::size_t n = 0; n < d.nodes.size(); ++n) {
    for (std::size_t p = 0; p < d.nodes[n].outs.size(); ++p) src[d.nodes[n].outs[p]] = {static_cast<long>(n), p};
    for (std::size_t p = 0; p < d.nodes[n].ins.size(); ++p) dst[d.nodes[n].ins[p]] = {static_cast<long>(n), p};
  }
  return {src, dst};
}

json mult_json(const NatExpr& e) { return e.to_string(); }
json mult_json(Nat n) { return n; }

json phases_json(const PhaseVec& v) {
  json out = json::array();
  for (const auto& s : v) out.push_back({{"count", s.count.to_string()}, {"phase", s.phase.to_string()}});
  return out;
}
json phases_json(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& r : v) out.push_back(r.to_string());
  return out;
}

json args_json(const Node& n) {
  json args = json::object();
  if (n.kind == NodeKind::Perm) args["perm"] = n.perm.to_string();
  if (n.kind == NodeKind::Box) {
    args["index"] = n.box->index;
    args["list"] = n.box->list.to_string();
    args["body"] = to_json(n.box->body);
  }
  return args;
}
json args_json(const ConcreteNode& n) {
  json args = json::object();
  if (n.kind == NodeKind::Perm) args["perm"] = n.perm;
  return args;
}

template <typename D>
json diagram_json(const D& d, json params) {
  auto [src, dst] = endpoints(d);
  json nodes = json::array();
  for (std::size_t i = 0; i < d.nodes.size(); ++i) {
    const auto& n = d.nodes[i];
    nodes.push_back({{"id", i},
                     {"kind", node_kind_name(n.kind)},
                     {"args", args_json(n)},
                     {"phases", phases_json(n.phases)}});
  }
  json edges = json::array();
  for (std::size_t w = 0; w < d.wires.size(); ++w)
    edges.push_back({{"src", {src[w].id, src[w].port}}, {"dst", {dst[w].id, dst[w].port}}, {"mult", mult_json(d.wires[w])}});
  return {{"params", std::move(params)},
          {"nodes", std::move(nodes)},
          {"edges", std::move(edges)},
          {"inputs", d.inputs},
          {"outputs", d.outputs}};
}

const char* node_style(NodeKind k) {
  switch (k) {
    case NodeKind::Z: return "shape=circle,style=filled,fillcolor=\"#99dd99\"";
    case NodeKind::X: return "shape=circle,style=filled,fillcolor=\"#ff8888\"";
    case NodeKind::Hadamard: return "shape=square,style=filled,fillcolor=\"#ffff66\"";
    case NodeKind::Ground: return "shape=invtriangle";
    case NodeKind::Gather:
    case NodeKind::Split: return "shape=triangle,style=filled,fillcolor=\"#dddddd\"";
    case NodeKind::Perm: return "shape=box,style=rounded";
    case NodeKind::Wire: return "shape=point";
    default: return "shape=ellipse";
  }
}

std::string label(const Node& n) {
  std::string s = node_kind_name(n.kind);
  if (!n.phases.empty()) s += "\\n" + to_string(n.phases);
  if (n.kind == NodeKind::Perm) s += "\\n" + n.perm.to_string();
  return s;
}
std::string label(const ConcreteNode& n) {
  std::string s = node_kind_name(n.kind);
  bool nonzero = false;
  for (const auto& r : n.phases) nonzero = nonzero || r.num != 0;
  if (nonzero) {
    s += "\\n";
    for (std::size_t i = 0; i < n.phases.size(); ++i) s += (i ? "," : "") + n.phases[i].to_string();
  }
  return s;
}

std::string mult_text(const NatExpr& e) { return e.to_string(); }
std::string mult_text(Nat n) { return std::to_string(n); }

class DotWriter {
 public:
  std::string str() const { return out_.str(); }

  template <typename D>
  void top(const D& d) {
    out_ << "digraph szx {\n  rankdir=LR;\n  node [fontsize=10];\n";
    std::vector<std::string> in, outp;
    for (std::size_t i = 0; i < d.inputs.size(); ++i) {
      in.push_back("in" + std::to_string(i));
      out_ << "  " << in.back() << " [shape=plaintext,label=\"in " << i << "\"];\n";
    }
    for (std::size_t i = 0; i < d.outputs.size(); ++i) {
      outp.push_back("out" + std::to_string(i));
      out_ << "  " << outp.back() << " [shape=plaintext,label=\"out " << i << "\"];\n";
    }
    body(d, "n", in, outp, "  ");
    out_ << "}\n";
  }

 private:
  // Emits the nodes and edges of d; boundary wires attach to the given
  // external endpoint names.
  template <typename D>
  void body(const D& d, const std::string& prefix, const std::vector<std::string>& in,
            const std::vector<std::string>& outp, const std::string& indent) {
    auto [src, dst] = endpoints(d);
    std::vector<std::vector<std::string>> box_in(d.nodes.size()), box_out(d.nodes.size());
    for (std::size_t i = 0; i < d.nodes.size(); ++i) {
      const auto& n = d.nodes[i];
      std::string name = prefix + std::to_string(i);
      if constexpr (std::is_same_v<D, Diagram>) {
        if (n.kind == NodeKind::Box) {
          out_ << indent << "subgraph cluster_" << name << " {\n"
               << indent << "  label=\"for " << n.box->index << " in " << n.box->list.to_string() << "\";\n";
          for (std::size_t p = 0; p < n.ins.size(); ++p) {
            box_in[i].push_back(name + "_i" + std::to_string(p));
            out_ << indent << "  " << box_in[i].back() << " [shape=point];\n";
          }
          for (std::size_t p = 0; p < n.outs.size(); ++p) {
            box_out[i].push_back(name + "_o" + std::to_string(p));
            out_ << indent << "  " << box_out[i].back() << " [shape=point];\n";
          }
          body(n.box->body, name + "_", box_in[i], box_out[i], indent + "  ");
          out_ << indent << "}\n";
          continue;
        }
      }
      out_ << indent << name << " [" << node_style(n.kind) << ",label=\"" << label(n) << "\"];\n";
    }
    auto end = [&](const Port& p, bool source) {
      if (p.id == -1) return in[p.port];
      if (p.id == -2) return outp[p.port];
      auto i = static_cast<std::size_t>(p.id);
      const auto& ports = source ? box_out[i] : box_in[i];
      return ports.empty() ? prefix + std::to_string(i) : ports[p.port];
    };
    for (std::size_t w = 0; w < d.wires.size(); ++w)
      out_ << indent << end(src[w], true) << " -> " << end(dst[w], false) << " [label=\"" << mult_text(d.wires[w])
           << "\"];\n";
  }

  std::ostringstream out_;
};

}  // namespace

nlohmann::json to_json(const Diagram& d) { return diagram_json(d, d.params); }
nlohmann::json to_json(const ConcreteDiagram& d) { return diagram_json(d, json::array()); }

std::string to_dot(const Diagram& d) {
  DotWriter w;
  w.top(d);
  return w.str();
}

std::string to_dot(const ConcreteDiagram& d) {
  DotWriter w;
  w.top(d);
  return w.str();
}

}  // namespace szxc
