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

#include <Eigen/Dense>

#include "doctest.h"
#include "support.hpp"
#include "szxc/circuit.hpp"
#include "szxc/error.hpp"
#include "szxc/instantiate.hpp"
#include "szxc/simplify.hpp"

using namespace szxc;

namespace {

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

CPMap gate(const std::string& name, Rational angle = {}) { return CPMap::unitary(gate_matrix(name, angle)); }

CPMap concrete(const Diagram& d, const NatEnv& env = {}) { return interpret(simplify(instantiate(d, env))); }

// Hadamards on every output wire, so that any diagram can be post-composed.
ConcreteDiagram hadamards_after(const ConcreteDiagram& d) {
  ConcreteDiagram out;
  for (WireId w : d.outputs) {
    Nat m = d.wires[w];
    out = tensor(out, concrete_generator(NodeKind::Hadamard, {m}, {m}));
  }
  return out;
}

std::vector<std::string> lines(const Circuit& c) {
  std::vector<std::string> out;
  for (const auto& op : c.ops) out.push_back(op.to_string());
  return out;
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("generators") {
  CHECK(cpm_equal_mod_scalar(interpret(concrete_spider(NodeKind::Z, {1}, {1}, {Rational{}})), CPMap::identity(1)));
  CHECK(cpm_equal_mod_scalar(interpret(concrete_generator(NodeKind::Hadamard, {1}, {1})), gate("H")));
  CHECK(cpm_equal_mod_scalar(interpret(concrete_spider(NodeKind::Z, {1}, {1}, {Rational::make(1, 8)})),
                             gate("Rz", Rational::make(1, 8))));
  // An X spider is a Z spider between Hadamards.
  ConcreteDiagram x = concrete_spider(NodeKind::X, {1}, {1}, {Rational::make(1, 3)});
  ConcreteDiagram hzh = compose(compose(concrete_generator(NodeKind::Hadamard, {1}, {1}),
                                        concrete_spider(NodeKind::Z, {1}, {1}, {Rational::make(1, 3)})),
                                concrete_generator(NodeKind::Hadamard, {1}, {1}));
  CHECK(cpm_residual(interpret(x), interpret(hzh)) <= 1e-12);
  // H H = 1 exactly.
  ConcreteDiagram hh = compose(concrete_generator(NodeKind::Hadamard, {2}, {2}),
                               concrete_generator(NodeKind::Hadamard, {2}, {2}));
  CHECK(cpm_equal_exact(interpret(hh), CPMap::identity(2)));
}

TEST_CASE("measurement decoheres") {
  CPMap m = concrete(gate_diagram(Prim::Meas));
  CPMap expected = CPMap::identity(1);
  expected.m(1, 1) = expected.m(2, 2) = 0;
  CHECK(cpm_equal_mod_scalar(m, expected));
  // new is the inverse embedding: a bit is already diagonal.
  CPMap n = concrete(gate_diagram(Prim::New));
  CHECK(cpm_equal_mod_scalar(n, expected));
}

TEST_CASE("snake") {
  ConcreteDiagram wire = concrete_generator(NodeKind::Wire, {1}, {1});
  ConcreteDiagram snake = compose(tensor(wire, concrete_generator(NodeKind::Cup, {}, {1, 1})),
                                  tensor(concrete_generator(NodeKind::Cap, {1, 1}, {}), wire));
  CHECK(cpm_equal_mod_scalar(interpret(snake), CPMap::identity(1)));
}

TEST_CASE("functoriality on random diagrams") {
  testing::Rng rng(99);
  for (int i = 0; i < 40; ++i) {
    ConcreteDiagram a = testing::random_diagram(rng, 4);
    ConcreteDiagram h = hadamards_after(a);
    CPMap seq = interpret(compose(a, h));
    CHECK(cpm_equal_exact(seq, interpret(a).then(interpret(h)), 1e-9));
    ConcreteDiagram b = testing::random_diagram(rng, 3);
    if (testing::boundary_width(a) + testing::boundary_width(b) > 8) continue;
    CHECK(cpm_equal_exact(interpret(tensor(a, b)), interpret(a).tensor(interpret(b)), 1e-9));
  }
}

TEST_CASE("scalar-insensitive comparison") {
  CPMap a = gate("H");
  CPMap b = a;
  b.m *= 3.0;
  CHECK(cpm_equal_mod_scalar(a, b));
  CHECK_FALSE(cpm_equal_exact(a, b));
  CHECK_FALSE(cpm_equal_mod_scalar(CPMap::identity(1), a));
  CHECK_THROWS_AS(cpm_residual(CPMap::identity(1), CPMap::identity(2)), OracleError);
}

TEST_CASE("boundary cap") {
  ConcreteDiagram wide = concrete_generator(NodeKind::Wire, {9}, {9});
  CHECK_THROWS_AS(interpret(wide), OracleError);
  OracleOptions opts;
  opts.max_qubits = 1;
  CHECK_THROWS_AS(interpret(concrete_generator(NodeKind::Hadamard, {2}, {2}), opts), OracleError);
}

TEST_CASE("circuit extraction") {
  Program p = testing::corpus_program("qft.ld");
  Circuit crot = circuit_extract(p.inlined("crot"), {{"n", Nat{2}}});
  CAPTURE(crot.to_string());
  CHECK(crot.inputs == 2);
  CHECK(lines(crot) == std::vector<std::string>{"Rz(1/4) q1", "CNOT q0 q1", "RzInv(3/4) q1", "CNOT q0 q1"});
  Circuit one = circuit_extract(p.inlined("qft"), {{"n", Nat{1}}});
  CHECK(lines(one) == std::vector<std::string>{"H q0"});
  Circuit none = circuit_extract(p.inlined("qft"), {{"n", Nat{0}}});
  CHECK(none.ops.empty());
  CHECK(simulate_circuit(none).m.rows() == 1);
  Circuit alloc = circuit_extract(parse_term("new #0"), {});
  CHECK(lines(alloc) == std::vector<std::string>{"alloc|0> q0", "decohere q0"});
}

TEST_CASE("circuit simulation matches gate matrices") {
  Circuit c;
  c.inputs = c.wires = 2;
  c.ops.push_back({Instruction::Op::Gate, "H", {}, {0}, false});
  c.ops.push_back({Instruction::Op::Gate, "CNOT", {}, {0, 1}, false});
  c.outputs = {0, 1};
  Eigen::MatrixXcd u = gate_matrix("CNOT", {}) * kron(gate_matrix("H", {}), Eigen::MatrixXcd::Identity(2, 2));
  CHECK(cpm_equal_exact(simulate_circuit(c), CPMap::unitary(u), 1e-12));
}

TEST_CASE("GHZ fan-out against a hand-built unitary") {
  Diagram f = compile(testing::corpus_program("ghz.ld").inlined("fanout"));
  CPMap got = concrete(f, {{"n", Nat{2}}});
  // Inputs (c, t1, t2); outputs (t1, t2, c).
  Eigen::MatrixXcd i2 = Eigen::MatrixXcd::Identity(2, 2);
  Eigen::MatrixXcd h = kron(kron(gate_matrix("H", {}), i2), i2);
  Eigen::MatrixXcd c01 = kron(gate_matrix("CNOT", {}), i2);
  Eigen::MatrixXcd c02 = Eigen::MatrixXcd::Zero(8, 8);
  Eigen::MatrixXcd rot = Eigen::MatrixXcd::Zero(8, 8);
  for (int b = 0; b < 8; ++b) {
    int c = b >> 2, t1 = (b >> 1) & 1, t2 = b & 1;
    c02((c << 2) | (t1 << 1) | (t2 ^ c), b) = 1;
    rot((t1 << 2) | (t2 << 1) | c, b) = 1;
  }
  CPMap expected = CPMap::unitary(rot * c02 * c01 * h);
  CHECK(cpm_residual(got, expected) <= 1e-9);
}

TEST_CASE("double and long double agree") {
  testing::Rng rng(5);
  for (int i = 0; i < 10; ++i) {
    ConcreteDiagram d = testing::random_diagram(rng, 4);
    CPMap a = interpret(d);
    auto b = interpret_as<long double>(d);
    REQUIRE(b.m.rows() == a.m.rows());
    double diff = 0;
    for (Eigen::Index r = 0; r < a.m.rows(); ++r)
      for (Eigen::Index c = 0; c < a.m.cols(); ++c)
        diff = std::max(diff, std::abs(a.m(r, c) - std::complex<double>(b.m(r, c))));
    CHECK(diff <= 1e-9 * (1 + a.m.norm()));
  }
}

}  // TEST_SUITE
