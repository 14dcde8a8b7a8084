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

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "szxc/circuit.hpp"
#include "szxc/diagram.hpp"
#include "szxc/error.hpp"
#include "szxc/oracle.hpp"
#include "szxc/parser.hpp"
#include "szxc/translator.hpp"

namespace szxc {

/// An error tagged with the pipeline stage that raised it. what() reads
/// `stage: message`.
class StageError : public Error {
 public:
  StageError(std::string stage, const std::string& message)
      : Error(stage + ": " + message), stage_(std::move(stage)) {}
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

struct PipelineOptions {
  bool simplify = true;
  OracleOptions oracle;
  RotationConvention rotation = RotationConvention::TwoPiOverM;
  /// Residual accepted by verify().
  double tolerance = 1e-9;
};

/// Runs fn, rethrowing any szxc::Error as a StageError for `stage`. Errors
/// already tagged pass through.
template <typename F>
auto run_stage(const std::string& stage, F&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const StageError&) {
    throw;
  } catch (const Error& e) {
    throw StageError(stage, e.what());
  }
}

/// Parses `name=value` bindings; a value is a natural or a comma-separated
/// list of naturals (`[]` for the empty list).
NatEnv parse_bindings(const std::vector<std::string>& bindings);

Program load_program(const std::string& path);
Program load_program_text(const std::string& text);

/// Typechecks every definition; stage "typecheck".
std::map<std::string, Type> check(const Program& prog);

/// Family diagram of a definition (the entry when `name` is empty).
Diagram compile_definition(const Program& prog, const std::string& name, const PipelineOptions& opts);

/// Instantiates and, unless disabled, simplifies.
ConcreteDiagram concretize(const Diagram& family, const NatEnv& env, const PipelineOptions& opts);

struct VerifyReport {
  CPMap compiled;
  CPMap expected;
  Circuit circuit;
  double residual = 0;
  std::size_t nodes = 0;
  bool pass = false;
};

/// Compiles a definition, instantiates it at env and compares its map with
/// the simulated circuit obtained by reducing the same definition.
VerifyReport verify(const Program& prog, const std::string& name, const NatEnv& env, const PipelineOptions& opts);

}  // namespace szxc
