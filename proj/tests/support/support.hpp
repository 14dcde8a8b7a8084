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

// Generators and checks shared by the unit tests and the acceptance runner.

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "szxc/diagram.hpp"
#include "szxc/oracle.hpp"
#include "szxc/parser.hpp"
#include "szxc/translator.hpp"
#include "szxc/types.hpp"

namespace szxc::testing {

using Rng = std::mt19937_64;

std::string corpus_path(const std::string& file);
Program corpus_program(const std::string& file);
/// Well-typed corpus files (everything except bad_*.ld), sorted.
std::vector<std::string> corpus_files();
/// Negative corpus files, sorted.
std::vector<std::string> bad_corpus_files();

/// Random well-formed concrete diagram whose boundary and every cut through
/// the construction stay within `max_qubits`. Zero-multiplicity wires,
/// cups, caps, grounds and permutations all occur.
ConcreteDiagram random_diagram(Rng& rng, Nat max_qubits = 5);

/// Random family body over the single parameter `index` with at most
/// `max_generators` generators. Multiplicities are drawn from {index, 1,
/// index+1} and spider phases depend on the index.
Diagram random_family_body(Rng& rng, const std::string& index, int max_generators = 3);

/// A diagram with one box node running `body` over `list`, with `index`
/// bound to the elements; boundary multiplicities are the evaluated sums.
/// `env` binds the body's other parameters.
Diagram box_over(const Diagram& body, const std::string& index, const NatList& list, const NatEnv& env = {});

/// Gather and split generators (splits are rotated gathers).
std::size_t count_gathers(const ConcreteDiagram& d);

/// Boundary width of a concrete diagram, inputs plus outputs.
Nat boundary_width(const ConcreteDiagram& d);

/// Closed term of type Nat (or Vec Nat n when `list` is set) inside the
/// evaluable fragment.
Term random_evaluable_term(Rng& rng, bool list = false, int depth = 4);

/// Subterms of corpus definitions that evaluate once their free parameters
/// are replaced by small naturals.
std::vector<Term> evaluable_corpus_subterms();

/// interpret(simplify(instantiate(translate(ctx, m), env))).
CPMap semantics(const Context& ctx, const Term& m, const NatEnv& env = {});

/// A term together with the state context it is translated under.
struct StepCase {
  std::string name;
  Context ctx;
  Term term;
};

/// Small translatable terms whose reduction sequences together fire every
/// reduction rule, each within five qubits.
std::vector<StepCase> step_cases();

struct StepReport {
  std::vector<std::string> rules;
  double worst_residual = 0;
  std::size_t steps = 0;
  std::string failure;
};

/// Reduces `c.term` to a value, comparing the translation of every pair of
/// consecutive terms. Stops at the first error (recorded in `failure`).
StepReport check_translation_steps(const StepCase& c, std::size_t max_steps = 400);

/// Applies g : 1_in ⊗ 1_s → 1_out ⊗ 1_s to k inputs in sequence, threading
/// the s register through, built only from compose and tensor.
ConcreteDiagram sequential_fold(const ConcreteDiagram& g, Nat in, Nat out, Nat s, Nat k);

/// Residual between the translation of an accuMap threading k CNOTs through
/// one accumulator qubit and the same gate folded by hand.
double accumap_fold_residual(Nat k);

/// split ; (body(head) ⊗ box(tail)) ; gather on every boundary register: the
/// expected unrolling of a box over head :: tail.
ConcreteDiagram unrolled_box(const Diagram& body, const std::string& index, Nat head, const NatList& tail,
                             const NatEnv& env = {});

struct BoxSize {
  std::size_t box_nodes = 0;   // instantiated box over the list
  std::size_t body_nodes = 0;  // one instance of the body
  std::size_t gathers = 0;     // gathers and splits of that instance
};

/// Sizes of `family` boxed over its parameter `index` with the given list,
/// against a single instance at index = 1. `env` binds the other parameters.
BoxSize box_size(const Diagram& family, const std::string& index, const NatList& list, const NatEnv& env = {});

}  // namespace szxc::testing
