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

#include "szxc/phase.hpp"

#include <numeric>

#include "szxc/error.hpp"

namespace szxc {

Rational Rational::make(std::int64_t num, std::uint64_t den) {
  if (den == 0) throw DiagramError("phase with zero denominator");
  auto d = static_cast<std::int64_t>(den);
  std::int64_t n = num % d;
  if (n < 0) n += d;
  std::int64_t g = std::gcd(n, d);
  if (g == 0) g = 1;
  return {n / g, static_cast<std::uint64_t>(d / g)};
}

std::string Rational::to_string() const {
  if (num == 0) return "0";
  return std::to_string(num) + "/" + std::to_string(den);
}

Rational Phase::eval(const NatEnv& env) const {
  Nat d = nat_eval(den, env);
  if (d == 0) throw DiagramError("rotation by 2pi/0 at " + to_string());
  return Rational::make(num, d);
}

std::string Phase::to_string() const {
  if (num == 0) return "0";
  return std::to_string(num) + "/" + (den.as<NatExpr::Const>() || den.as<NatExpr::Var>() ? den.to_string() : "(" + den.to_string() + ")");
}

PhaseVec uniform(Phase phase, NatExpr count) { return {PhaseSegment{std::move(phase), std::move(count)}}; }

PhaseVec concat(PhaseVec a, const PhaseVec& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

NatExpr length(const PhaseVec& v) {
  if (v.empty()) return NatExpr(Nat{0});
  NatExpr total = v.front().count;
  for (std::size_t i = 1; i < v.size(); ++i) total = total + v[i].count;
  return total;
}

std::vector<Rational> eval(const PhaseVec& v, const NatEnv& env) {
  std::vector<Rational> out;
  for (const auto& seg : v) {
    Nat n = nat_eval(seg.count, env);
    if (n == 0) continue;
    Rational r = seg.phase.eval(env);
    out.insert(out.end(), n, r);
  }
  return out;
}

PhaseVec substitute(const PhaseVec& v, const std::string& name, const NatExpr& value) {
  PhaseVec out;
  for (const auto& seg : v)
    out.push_back({Phase{seg.phase.num, substitute(seg.phase.den, name, value)}, substitute(seg.count, name, value)});
  return out;
}

std::string to_string(const PhaseVec& v) {
  std::string s;
  for (const auto& seg : v) {
    if (!s.empty()) s += " ++ ";
    s += seg.phase.to_string() + "^" + seg.count.to_string();
  }
  return s.empty() ? "[]" : s;
}

Phase rotation_phase(int sign, const NatExpr& m, RotationConvention conv) {
  return Phase{sign, conv == RotationConvention::PiOverM ? NatExpr(Nat{2}) * m : m};
}

}  // namespace szxc
