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
#include <functional>
#include <optional>
#include <string>

#include "szxc/term.hpp"

namespace szxc {

struct StepResult {
  Term term;
  /// Name of the rule whose redex fired, e.g. "beta", "let-tensor", "split".
  std::string rule;
};

/// Hook for saturated applications of meas, new and the gates, which the
/// rewrite system treats as inert. Returning nullopt leaves the term stuck.
class EffectHandler {
 public:
  virtual ~EffectHandler() = default;
  virtual std::optional<Term> apply(const PrimApp& app) = 0;
};

/// One step of the weak call-by-value rewrite system, or nullopt when M is a
/// value or stuck. Arguments are reduced before functions; in M □ N the
/// right operand is reduced first.
std::optional<StepResult> step(const Term& m, EffectHandler* effects = nullptr);

/// Fires the rule of a saturated primitive application whose arguments are
/// values (accuMap, split, append, drop, range, reverse).
std::optional<StepResult> step_primitive(const Term& m);

struct NormalizeResult {
  Term term;
  std::size_t steps = 0;
  bool value = false;
};

using TraceFn = std::function<void(std::size_t, const StepResult&)>;

constexpr std::size_t kDefaultFuel = 1'000'000;

/// Iterates `step` to a value or a stuck term. Throws EvalError when the fuel
/// runs out.
NormalizeResult normalize(const Term& m, std::size_t fuel = kDefaultFuel, const TraceFn& trace = {},
                          EffectHandler* effects = nullptr);

/// Normalizes and then keeps reducing inside tensors and vectors, left to
/// right, until no subterm steps.
NormalizeResult normalize_deep(const Term& m, std::size_t fuel = kDefaultFuel, EffectHandler* effects = nullptr);

}  // namespace szxc
