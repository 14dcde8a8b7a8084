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

// Command-line driver: parse, typecheck, translate, instantiate, simplify and
// emit or verify.

#include <cstdio>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "szxc/diagram_io.hpp"
#include "szxc/instantiate.hpp"
#include "szxc/param_eval.hpp"
#include "szxc/pipeline.hpp"
#include "szxc/reducer.hpp"
#include "szxc/typechecker.hpp"

namespace {

using namespace szxc;

constexpr int kOk = 0;
constexpr int kUserError = 1;
constexpr int kVerifyFailed = 2;

struct Config {
  std::string input;
  std::string entry;
  std::vector<std::string> params;
  std::string emit = "json";
  bool no_simplify = false;
  std::size_t max_qubits = 8;
  std::string rz = "2pi";
  bool trace = false;
  std::size_t fuel = kDefaultFuel;
};

PipelineOptions options(const Config& cfg) {
  PipelineOptions o;
  o.simplify = !cfg.no_simplify;
  o.oracle.max_qubits = cfg.max_qubits;
  o.rotation = cfg.rz == "pi" ? RotationConvention::PiOverM : RotationConvention::TwoPiOverM;
  return o;
}

const Definition& entry_def(const Program& prog, const Config& cfg) {
  if (cfg.entry.empty()) return prog.entry_def();
  const Definition* d = prog.find(cfg.entry);
  if (!d) throw StageError("params", "no definition named '" + cfg.entry + "'");
  return *d;
}

// Substitutes bound parameters into the leading parameter abstractions.
Term bind_params(Term m, const NatEnv& env) {
  while (const auto* l = m.as<Term::PLam>()) {
    auto it = env.find(l->name);
    if (it == env.end()) break;
    if (!std::holds_alternative<Nat>(it->second))
      throw StageError("params", "'" + l->name + "' takes a natural, not a list");
    m = subst(l->body, l->name, Term::nat(std::get<Nat>(it->second)));
  }
  return m;
}

int cmd_check(const Config& cfg) {
  Program prog = load_program(cfg.input);
  try {
    for (const auto& [name, type] : typecheck_program(prog)) std::cout << name << " : " << type.to_string() << "\n";
  } catch (const TypeError& e) {
    std::cerr << "typecheck: " << e.render(cfg.input) << "\n";
    return kUserError;
  }
  return kOk;
}

int cmd_eval(const Config& cfg) {
  Program prog = load_program(cfg.input);
  check(prog);
  NatEnv env = parse_bindings(cfg.params);
  Term m = bind_params(prog.inlined(entry_def(prog, cfg).name), env);
  ParamValue v = run_stage("eval", [&] { return eval(m, env); });
  std::cout << v.to_json() << "\n";
  return kOk;
}

int cmd_reduce(const Config& cfg) {
  Program prog = load_program(cfg.input);
  check(prog);
  Term m = bind_params(prog.inlined(entry_def(prog, cfg).name), parse_bindings(cfg.params));
  TraceFn trace;
  if (cfg.trace)
    trace = [](std::size_t i, const StepResult& s) {
      std::cerr << "[" << i << "] " << s.rule << ": " << pretty_print(s.term) << "\n";
    };
  NormalizeResult r = run_stage("reduce", [&] { return normalize(m, cfg.fuel, trace); });
  std::cout << pretty_print(r.term) << "\n";
  if (!r.value) std::cerr << "reduce: stuck after " << r.steps << " steps\n";
  return kOk;
}

void emit(const Config& cfg, const nlohmann::json& j, const std::string& dot) {
  if (cfg.emit == "dot")
    std::cout << dot;
  else
    std::cout << j.dump(2) << "\n";
}

int cmd_compile(const Config& cfg) {
  Program prog = load_program(cfg.input);
  check(prog);
  Diagram d = compile_definition(prog, cfg.entry, options(cfg));
  emit(cfg, to_json(d), to_dot(d));
  return kOk;
}

int cmd_instantiate(const Config& cfg) {
  Program prog = load_program(cfg.input);
  check(prog);
  PipelineOptions o = options(cfg);
  ConcreteDiagram c = concretize(compile_definition(prog, cfg.entry, o), parse_bindings(cfg.params), o);
  emit(cfg, to_json(c), to_dot(c));
  return kOk;
}

int cmd_simulate(const Config& cfg) {
  Program prog = load_program(cfg.input);
  check(prog);
  PipelineOptions o = options(cfg);
  ConcreteDiagram c = concretize(compile_definition(prog, cfg.entry, o), parse_bindings(cfg.params), o);
  CPMap m = run_stage("oracle", [&] { return interpret(c, o.oracle); });
  std::cout << cpmap_to_json(m) << "\n";
  return kOk;
}

int cmd_verify(const Config& cfg) {
  Program prog = load_program(cfg.input);
  check(prog);
  VerifyReport r = verify(prog, cfg.entry, parse_bindings(cfg.params), options(cfg));
  std::cout << (r.pass ? "PASS" : "FAIL") << " residual=" << std::scientific << std::setprecision(3) << r.residual
            << " nodes=" << r.nodes << "\n";
  return r.pass ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"szxc: compile lambda-D programs to scalable ZX diagram families"};
  app.require_subcommand(1);
  Config cfg;
  if (const char* cap = std::getenv("SZXC_MAX_QUBITS")) cfg.max_qubits = std::strtoul(cap, nullptr, 10);

  struct Sub {
    const char* name;
    const char* help;
    int (*run)(const Config&);
  };
  const Sub subs[] = {
      {"check", "typecheck every definition", cmd_check},
      {"eval", "evaluate an entry of parameter type", cmd_eval},
      {"reduce", "print the normal form of the entry", cmd_reduce},
      {"compile", "emit the diagram family of the entry", cmd_compile},
      {"instantiate", "emit the concrete diagram at the given parameters", cmd_instantiate},
      {"simulate", "print the completely positive map of the compiled diagram", cmd_simulate},
      {"verify", "compare the compiled map with the extracted circuit", cmd_verify},
  };
  int (*chosen)(const Config&) = nullptr;
  for (const auto& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("input", cfg.input, "source file")->required();
    sub->add_option("--entry", cfg.entry, "definition to use instead of the program entry");
    sub->add_option("--param,-p", cfg.params, "parameter binding name=value; value may be a comma list");
    sub->add_option("--emit", cfg.emit, "output format")->check(CLI::IsMember({"json", "dot"}));
    sub->add_flag("--no-simplify", cfg.no_simplify, "skip the simplifier");
    sub->add_option("--max-qubits", cfg.max_qubits, "qubit cap of the semantic oracle");
    sub->add_option("--rz-convention", cfg.rz, "rotation angle of Rz @m: 2pi/m or pi/m")
        ->check(CLI::IsMember({"2pi", "pi"}));
    sub->add_flag("--trace", cfg.trace, "print each reduction step");
    sub->add_option("--fuel", cfg.fuel, "reduction step limit");
    sub->callback([&chosen, run = s.run] { chosen = run; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUserError;
  }
  try {
    return chosen(cfg);
  } catch (const szxc::StageError& e) {
    std::cerr << e.what() << "\n";
  } catch (const szxc::TypeError& e) {
    std::cerr << "typecheck: " << e.render(cfg.input) << "\n";
  } catch (const szxc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kUserError;
}
