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

#include "szxc/pipeline.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "szxc/instantiate.hpp"
#include "szxc/simplify.hpp"
#include "szxc/typechecker.hpp"

namespace szxc {

namespace {

Nat parse_nat(const std::string& s, const std::string& binding) {
  Nat v = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size() || s.empty())
    throw StageError("params", "bad value in '" + binding + "'");
  return v;
}

const Definition& lookup(const Program& prog, const std::string& name) {
  if (name.empty()) return prog.entry_def();
  const Definition* d = prog.find(name);
  if (!d) throw StageError("params", "no definition named '" + name + "'");
  return *d;
}

}  // namespace

NatEnv parse_bindings(const std::vector<std::string>& bindings) {
  NatEnv env;
  for (const auto& b : bindings) {
    auto eq = b.find('=');
    if (eq == std::string::npos || eq == 0) throw StageError("params", "expected name=value, got '" + b + "'");
    std::string name = b.substr(0, eq), value = b.substr(eq + 1);
    if (value == "[]") {
      env[name] = NatList{};
    } else if (value.find(',') != std::string::npos) {
      NatList list;
      std::stringstream ss(value);
      for (std::string item; std::getline(ss, item, ',');) list.push_back(parse_nat(item, b));
      env[name] = list;
    } else {
      env[name] = parse_nat(value, b);
    }
  }
  return env;
}

Program load_program(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StageError("io", "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return load_program_text(ss.str());
}

Program load_program_text(const std::string& text) {
  return run_stage("parse", [&] { return parse_program(text); });
}

std::map<std::string, Type> check(const Program& prog) {
  return run_stage("typecheck", [&] { return typecheck_program(prog); });
}

Diagram compile_definition(const Program& prog, const std::string& name, const PipelineOptions& opts) {
  const Definition& def = lookup(prog, name);
  Term body = prog.inlined(def.name);
  return run_stage("translate", [&] { return compile(body, TranslateOptions{opts.rotation}); });
}

ConcreteDiagram concretize(const Diagram& family, const NatEnv& env, const PipelineOptions& opts) {
  ConcreteDiagram c = run_stage("instantiate", [&] { return instantiate(family, env); });
  if (!opts.simplify) return c;
  return run_stage("simplify", [&] { return simplify(c); });
}

VerifyReport verify(const Program& prog, const std::string& name, const NatEnv& env, const PipelineOptions& opts) {
  VerifyReport r;
  Diagram family = compile_definition(prog, name, opts);
  ConcreteDiagram c = concretize(family, env, opts);
  r.nodes = node_count(c);
  r.compiled = run_stage("oracle", [&] { return interpret(c, opts.oracle); });
  Term entry = prog.inlined(lookup(prog, name).name);
  r.circuit = run_stage("extract", [&] { return circuit_extract(entry, env, opts.rotation); });
  r.expected = run_stage("oracle", [&] { return simulate_circuit(r.circuit, opts.oracle); });
  r.residual = run_stage("oracle", [&] { return cpm_residual(r.compiled, r.expected); });
  r.pass = r.residual <= opts.tolerance;
  return r;
}

}  // namespace szxc
