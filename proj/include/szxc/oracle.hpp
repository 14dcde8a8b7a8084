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

#include <complex>
#include <cstddef>
#include <string>

#include <Eigen/Dense>

#include "szxc/diagram.hpp"

namespace szxc {

/// A superoperator on vectorized density matrices. Each qubit contributes one
/// index of dimension 4 equal to 2·ket + bra; the first qubit is the most
/// significant. Rows are outputs, columns inputs.
template <typename Scalar>
struct CPMapT {
  using Matrix = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;
  std::size_t q_in = 0;
  std::size_t q_out = 0;
  Matrix m;

  static CPMapT identity(std::size_t qubits);
  /// ρ ↦ UρU† for a 2^q × 2^q matrix U.
  static CPMapT unitary(const Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>& u);
  /// a then b.
  CPMapT then(const CPMapT& b) const;
  CPMapT tensor(const CPMapT& b) const;
};

using CPMap = CPMapT<double>;

struct OracleOptions {
  /// Boundary qubits accepted by interpret and simulate_circuit.
  std::size_t max_qubits = 8;
  /// Largest intermediate tensor, in qubits, during contraction.
  std::size_t max_intermediate = 11;
};

/// Interprets a concrete diagram as a completely positive map, up to the
/// usual unnormalized spider scalars. Throws OracleError.
template <typename Scalar>
CPMapT<Scalar> interpret_as(const ConcreteDiagram& d, const OracleOptions& opts = {});

inline CPMap interpret(const ConcreteDiagram& d, const OracleOptions& opts = {}) {
  return interpret_as<double>(d, opts);
}

/// ‖A/‖A‖ − B/‖B‖‖_F; zero when both maps vanish and 2 when only one does.
/// Throws OracleError on a dimension mismatch.
double cpm_residual(const CPMap& a, const CPMap& b);

bool cpm_equal_mod_scalar(const CPMap& a, const CPMap& b, double tol = 1e-9);

/// Entrywise equality without normalization.
bool cpm_equal_exact(const CPMap& a, const CPMap& b, double tol = 1e-12);

/// The map as {"q_in", "q_out", "re": [[…]], "im": [[…]]}.
std::string cpmap_to_json(const CPMap& a);

}  // namespace szxc
