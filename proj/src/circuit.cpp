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

#include "szxc/circuit.hpp"

#include <cmath>
#include <map>

#include "szxc/error.hpp"
#include "szxc/reducer.hpp"
#include "szxc/tensor.hpp"
#include "szxc/typechecker.hpp"

namespace szxc {

std::string Instruction::to_string() const {
  std::string s;
  switch (op) {
    case Op::Gate:
      s = name;
      if (name != "H" && name != "CNOT") s += "(" + angle.to_string() + ")";
      break;
    case Op::Allocate: s = std::string("alloc|") + (bit ? "1" : "0") + ">"; break;
    case Op::Decohere: s = "decohere"; break;
    case Op::Discard: s = "discard"; break;
  }
  for (auto w : wires) s += " q" + std::to_string(w);
  return s;
}

std::string Circuit::to_string() const {
  std::string s = "inputs " + std::to_string(inputs) + "\n";
  for (const auto& op : ops) s += op.to_string() + "\n";
  s += "outputs";
  for (auto w : outputs) s += " q" + std::to_string(w);
  return s + "\n";
}

Eigen::MatrixXcd gate_matrix(const std::string& name, const Rational& angle) {
  using C = std::complex<double>;
  const double h = 1.0 / std::sqrt(2.0);
  Eigen::MatrixXcd hm(2, 2);
  hm << h, h, h, -h;
  const C e = std::polar(1.0, 2 * M_PI * angle.turns());
  if (name == "H") return hm;
  if (name == "CNOT") {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(4, 4);
    m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1;
    return m;
  }
  Eigen::MatrixXcd rz = Eigen::MatrixXcd::Zero(2, 2);
  rz(0, 0) = 1;
  rz(1, 1) = e;
  if (name == "Rz" || name == "RzInv") return rz;
  if (name == "Rx" || name == "RxInv") return hm * rz * hm;
  throw OracleError("unknown gate '" + name + "'");
}

namespace {

class Extractor : public EffectHandler {
 public:
  explicit Extractor(RotationConvention conv) : conv_(conv) {}

  Term token(std::size_t wire) {
    std::string name = "%w" + std::to_string(wire);
    wire_of_[name] = wire;
    return Term::var(name);
  }
  std::size_t fresh_wire() { return circuit.wires++; }

  std::optional<std::size_t> wire(const Term& t) const {
    if (const auto* v = t.as<Term::Var>())
      if (auto it = wire_of_.find(v->name); it != wire_of_.end()) return it->second;
    return std::nullopt;
  }

  std::size_t wire_or_alloc(const Term& t) {
    if (auto w = wire(t)) return *w;
    if (const auto* b = t.as<Term::BitLit>()) {
      std::size_t w = fresh_wire();
      Instruction i;
      i.op = Instruction::Op::Allocate;
      i.bit = b->value;
      i.wires = {w};
      circuit.ops.push_back(i);
      return w;
    }
    throw EvalError("expected a qubit or bit, found " + pretty_print(t));
  }

  std::optional<Term> apply(const PrimApp& app) override {
    std::vector<Term> state;
    std::vector<Term> params;
    for (const auto& [is_param, a] : app.args) (is_param ? params : state).push_back(a);
    auto record = [&](Instruction::Op op, std::string name, std::vector<std::size_t> ws, Rational angle = {}) {
      Instruction i;
      i.op = op;
      i.name = std::move(name);
      i.wires = std::move(ws);
      i.angle = angle;
      circuit.ops.push_back(std::move(i));
    };
    switch (app.prim) {
      case Prim::Meas:
      case Prim::New: {
        std::size_t w = wire_or_alloc(state.at(0));
        record(Instruction::Op::Decohere, "", {w});
        return token(w);
      }
      case Prim::H: {
        std::size_t w = wire_or_alloc(state.at(0));
        record(Instruction::Op::Gate, "H", {w});
        return token(w);
      }
      case Prim::CNOT: {
        std::size_t c = wire_or_alloc(state.at(0)), t = wire_or_alloc(state.at(1));
        record(Instruction::Op::Gate, "CNOT", {c, t});
        return Term::tensor(token(c), token(t));
      }
      case Prim::Rz:
      case Prim::RzInv:
      case Prim::Rx:
      case Prim::RxInv: {
        const auto* m = params.at(0).as<Term::NatLit>();
        if (!m) return std::nullopt;
        int sign = app.prim == Prim::Rz || app.prim == Prim::Rx ? 1 : -1;
        Rational angle = rotation_phase(sign, NatExpr(m->value), conv_).eval({});
        std::size_t w = wire_or_alloc(state.at(0));
        record(Instruction::Op::Gate, prim_name(app.prim), {w}, angle);
        return token(w);
      }
      default:
        return std::nullopt;
    }
  }

  // Input value of the given type made of fresh input wires.
  Term input(const Type& t) {
    return std::visit(
        [&](const auto& node) -> Term {
          using N = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<N, Type::Qubit> || std::is_same_v<N, Type::Bit>) {
            std::size_t w = fresh_wire();
            ++circuit.inputs;
            return token(w);
          } else if constexpr (std::is_same_v<N, Type::Unit>) {
            return Term::star();
          } else if constexpr (std::is_same_v<N, Type::Tensor>) {
            Term a = input(node.lhs);
            return Term::tensor(a, input(node.rhs));
          } else if constexpr (std::is_same_v<N, Type::Vec>) {
            Nat n = nat_eval(node.size, {});
            std::vector<Term> elems;
            for (Nat i = 0; i < n; ++i) elems.push_back(input(node.elem));
            Term out = Term::vnil(node.elem);
            for (auto it = elems.rbegin(); it != elems.rend(); ++it) out = Term::cons(*it, out);
            return out;
          } else {
            throw EvalError("cannot feed an argument of type " + t.to_string() + " to a circuit");
          }
        },
        t.node());
  }

  void output(const Term& v) {
    if (v.as<Term::Star>() || v.as<Term::VNil>()) return;
    if (const auto* t = v.as<Term::Tensor>()) {
      output(t->lhs);
      output(t->rhs);
      return;
    }
    if (const auto* c = v.as<Term::Cons>()) {
      output(c->head);
      output(c->tail);
      return;
    }
    if (wire(v) || v.as<Term::BitLit>()) {
      circuit.outputs.push_back(wire_or_alloc(v));
      return;
    }
    throw EvalError("result is not a register of qubits and bits: " + pretty_print(v));
  }

  Circuit circuit;

 private:
  RotationConvention conv_;
  std::map<std::string, std::size_t> wire_of_;
};

}  // namespace

Circuit circuit_extract(const Term& entry, const NatEnv& params, RotationConvention conv) {
  Term m = entry;
  // Bind leading parameter abstractions by name.
  while (const auto* l = m.as<Term::PLam>()) {
    auto it = params.find(l->name);
    if (it == params.end()) throw EnvironmentError("parameter '" + l->name + "' is not bound");
    const auto* n = std::get_if<Nat>(&it->second);
    if (!n) throw EnvironmentError("parameter '" + l->name + "' must be a natural number");
    m = subst(l->body, l->name, Term::nat(*n));
  }
  Extractor ex(conv);
  Checker checker(false);
  Type t = checker.synth(m);
  // Feed one argument per state arrow.
  while (const auto* f = std::get_if<Type::Lolli>(&t.node())) {
    m = Term::app(m, ex.input(f->arg));
    t = f->result;
  }
  NormalizeResult r = normalize_deep(m, kDefaultFuel, &ex);
  ex.output(r.term);
  return ex.circuit;
}

CPMap simulate_circuit(const Circuit& c, const OracleOptions& opts) {
  if (c.inputs > opts.max_qubits || c.outputs.size() > opts.max_qubits)
    throw OracleError("circuit has more qubits than the limit of " + std::to_string(opts.max_qubits));
  using C = std::complex<double>;
  TensorNetwork<double> net(4);
  std::size_t next = 0;
  std::vector<std::size_t> label(c.wires, static_cast<std::size_t>(-1));
  std::vector<bool> live(c.wires, false);
  std::vector<std::size_t> in_labels;
  for (std::size_t w = 0; w < c.inputs; ++w) {
    label[w] = next++;
    live[w] = true;
    in_labels.push_back(label[w]);
  }
  auto check = [&](std::size_t w) {
    if (w >= c.wires || !live[w]) throw OracleError("instruction uses dead wire q" + std::to_string(w));
  };
  for (const auto& op : c.ops) {
    switch (op.op) {
      case Instruction::Op::Gate: {
        for (auto w : op.wires) check(w);
        Eigen::MatrixXcd u = gate_matrix(op.name, op.angle);
        CPMap s = CPMap::unitary(u);
        LabelledTensor<double> t;
        for (std::size_t k = 0; k < op.wires.size(); ++k) t.legs.push_back(next++);
        for (auto w : op.wires) t.legs.push_back(label[w]);
        t.data.resize(static_cast<std::size_t>(s.m.size()));
        for (Eigen::Index r = 0; r < s.m.rows(); ++r)
          for (Eigen::Index col = 0; col < s.m.cols(); ++col)
            t.data[static_cast<std::size_t>(r * s.m.cols() + col)] = s.m(r, col);
        for (std::size_t k = 0; k < op.wires.size(); ++k) label[op.wires[k]] = t.legs[k];
        net.add(std::move(t));
        break;
      }
      case Instruction::Op::Allocate: {
        std::size_t w = op.wires.at(0);
        if (w >= c.wires || live[w]) throw OracleError("allocating a live wire");
        live[w] = true;
        label[w] = next++;
        LabelledTensor<double> t{{label[w]}, {C(0), C(0), C(0), C(0)}};
        t.data[op.bit ? 3 : 0] = 1;
        net.add(std::move(t));
        break;
      }
      case Instruction::Op::Decohere: {
        std::size_t w = op.wires.at(0);
        check(w);
        LabelledTensor<double> t{{next, label[w]}, std::vector<C>(16, C(0))};
        t.data[0 * 4 + 0] = 1;
        t.data[3 * 4 + 3] = 1;
        label[w] = next++;
        net.add(std::move(t));
        break;
      }
      case Instruction::Op::Discard: {
        std::size_t w = op.wires.at(0);
        check(w);
        net.add(LabelledTensor<double>{{label[w]}, {C(1), C(0), C(0), C(1)}});
        live[w] = false;
        break;
      }
    }
  }
  std::vector<bool> is_out(c.wires, false);
  std::vector<std::size_t> out_labels;
  for (auto w : c.outputs) {
    check(w);
    if (is_out[w]) throw OracleError("wire q" + std::to_string(w) + " is output twice");
    is_out[w] = true;
    out_labels.push_back(label[w]);
  }
  for (std::size_t w = 0; w < c.wires; ++w)
    if (live[w] && !is_out[w]) net.add(LabelledTensor<double>{{label[w]}, {C(1), C(0), C(0), C(1)}});
  // Inputs wired straight to outputs need an identity tensor.
  std::vector<std::size_t> open = out_labels;
  for (std::size_t l : in_labels) {
    if (std::find(out_labels.begin(), out_labels.end(), l) != out_labels.end()) {
      std::vector<C> id(16, C(0));
      for (std::size_t k = 0; k < 4; ++k) id[k * 4 + k] = 1;
      net.add(LabelledTensor<double>{{l, next}, id});
      open.push_back(next++);
    } else {
      open.push_back(l);
    }
  }
  auto t = net.contract_all(open, opts.max_intermediate);
  CPMap out;
  out.q_in = c.inputs;
  out.q_out = c.outputs.size();
  const auto rows = static_cast<Eigen::Index>(detail::ipow(4, out.q_out));
  const auto cols = static_cast<Eigen::Index>(detail::ipow(4, out.q_in));
  out.m.resize(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r)
    for (Eigen::Index col = 0; col < cols; ++col) out.m(r, col) = t.data[static_cast<std::size_t>(r * cols + col)];
  return out;
}

}  // namespace szxc
