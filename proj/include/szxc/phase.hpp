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

#include <cstdint>
#include <string>
#include <vector>

#include "szxc/nat_expr.hpp"

namespace szxc {

/// A concrete phase 2π·num/den, kept in lowest terms with 0 <= num < den.
struct Rational {
  std::int64_t num = 0;
  std::uint64_t den = 1;

  static Rational make(std::int64_t num, std::uint64_t den);
  double turns() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string to_string() const;
  friend bool operator==(const Rational& a, const Rational& b) { return a.num == b.num && a.den == b.den; }
};

/// A symbolic phase 2π·num/den whose denominator may mention parameters.
struct Phase {
  std::int64_t num = 0;
  NatExpr den = NatExpr(Nat{1});

  static Phase zero() { return {}; }
  static Phase half() { return {1, NatExpr(Nat{2})}; }
  Rational eval(const NatEnv& env) const;
  std::string to_string() const;
};

/// `count` consecutive copies of one phase.
struct PhaseSegment {
  Phase phase;
  NatExpr count;
};

/// A phase vector as a concatenation of uniform runs. Explicit lists use runs
/// of length one.
using PhaseVec = std::vector<PhaseSegment>;

PhaseVec uniform(Phase phase, NatExpr count);
PhaseVec concat(PhaseVec a, const PhaseVec& b);
NatExpr length(const PhaseVec& v);
/// Segments of length zero never evaluate their phase, so a vanishing
/// rotation on an empty register cannot fail.
std::vector<Rational> eval(const PhaseVec& v, const NatEnv& env);
PhaseVec substitute(const PhaseVec& v, const std::string& name, const NatExpr& value);
std::string to_string(const PhaseVec& v);

/// Angle of a rotation gate `Rz @m`: a full turn over m by default, half of
/// that under the alternative reading of the gate table.
enum class RotationConvention { TwoPiOverM, PiOverM };

/// Phase of `Rz @m` (sign +1) or its inverse (sign -1).
Phase rotation_phase(int sign, const NatExpr& m, RotationConvention conv);

}  // namespace szxc
