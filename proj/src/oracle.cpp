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

#include "szxc/oracle.hpp"

#include <cmath>
#include <numeric>

#include "json.hpp"
#include "szxc/error.hpp"
#include "szxc/tensor.hpp"

namespace szxc {

namespace {

// Splits a doubled index into its per-qubit (ket, bra) bits.
inline std::size_t ket_part(std::size_t idx, std::size_t q) {
  std::size_t k = 0;
  for (std::size_t i = 0; i < q; ++i) k = (k << 1) | ((idx >> (2 * (q - 1 - i) + 1)) & 1U);
  return k;
}
inline std::size_t bra_part(std::size_t idx, std::size_t q) {
  std::size_t b = 0;
  for (std::size_t i = 0; i < q; ++i) b = (b << 1) | ((idx >> (2 * (q - 1 - i))) & 1U);
  return b;
}

}  // namespace

class SlotUnion {
 public:
  explicit SlotUnion(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

template <typename Scalar>
CPMapT<Scalar> CPMapT<Scalar>::identity(std::size_t qubits) {
  CPMapT out;
  out.q_in = out.q_out = qubits;
  out.m = Matrix::Identity(static_cast<Eigen::Index>(detail::ipow(4, qubits)),
                           static_cast<Eigen::Index>(detail::ipow(4, qubits)));
  return out;
}

template <typename Scalar>
CPMapT<Scalar> CPMapT<Scalar>::unitary(const Matrix& u) {
  std::size_t q = 0;
  while ((Eigen::Index{1} << q) < u.rows()) ++q;
  CPMapT out;
  out.q_in = out.q_out = q;
  const auto n = static_cast<Eigen::Index>(detail::ipow(4, q));
  out.m = Matrix::Zero(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c) {
      auto ur = static_cast<std::size_t>(r), uc = static_cast<std::size_t>(c);
      out.m(r, c) = u(static_cast<Eigen::Index>(ket_part(ur, q)), static_cast<Eigen::Index>(ket_part(uc, q))) *
                    std::conj(u(static_cast<Eigen::Index>(bra_part(ur, q)), static_cast<Eigen::Index>(bra_part(uc, q))));
    }
  return out;
}

template <typename Scalar>
CPMapT<Scalar> CPMapT<Scalar>::then(const CPMapT& b) const {
  if (q_out != b.q_in) throw OracleError("cannot compose maps of mismatched widths");
  CPMapT out;
  out.q_in = q_in;
  out.q_out = b.q_out;
  out.m = b.m * m;
  return out;
}

template <typename Scalar>
CPMapT<Scalar> CPMapT<Scalar>::tensor(const CPMapT& b) const {
  CPMapT out;
  out.q_in = q_in + b.q_in;
  out.q_out = q_out + b.q_out;
  out.m.resize(m.rows() * b.m.rows(), m.cols() * b.m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      out.m.block(i * b.m.rows(), j * b.m.cols(), b.m.rows(), b.m.cols()) = m(i, j) * b.m;
  return out;
}

namespace detail {

template <typename Scalar>
LabelledTensor<Scalar> doubled(const std::vector<std::complex<Scalar>>& pure, std::vector<std::size_t> legs) {
  const std::size_t r = legs.size();
  LabelledTensor<Scalar> t;
  t.legs = std::move(legs);
  t.data.assign(ipow(4, r), {});
  for (std::size_t k = 0; k < pure.size(); ++k) {
    if (pure[k] == std::complex<Scalar>{}) continue;
    for (std::size_t b = 0; b < pure.size(); ++b) {
      if (pure[b] == std::complex<Scalar>{}) continue;
      std::size_t idx = 0;
      for (std::size_t i = 0; i < r; ++i) {
        std::size_t kb = (k >> (r - 1 - i)) & 1U, bb = (b >> (r - 1 - i)) & 1U;
        idx = idx * 4 + 2 * kb + bb;
      }
      t.data[idx] = pure[k] * std::conj(pure[b]);
    }
  }
  return t;
}

template <typename Scalar>
std::vector<std::complex<Scalar>> spider_pure(bool x_basis, std::size_t legs, const Rational& phase) {
  using C = std::complex<Scalar>;
  const Scalar pi = std::acos(Scalar(-1));
  const C e = std::polar(Scalar(1), 2 * pi * static_cast<Scalar>(phase.num) / static_cast<Scalar>(phase.den));
  std::vector<C> t(ipow(2, legs), C{});
  if (!x_basis) {
    t.front() += C(1);
    t.back() += e;
    return t;
  }
  // |+…+⟩⟨+…+| + e^{iα}|−…−⟩⟨−…−|, legs in the computational basis.
  const Scalar norm = std::pow(Scalar(1) / std::sqrt(Scalar(2)), static_cast<Scalar>(legs));
  for (std::size_t x = 0; x < t.size(); ++x) {
    int parity = __builtin_popcountll(static_cast<unsigned long long>(x)) & 1;
    t[x] = norm * (C(1) + e * Scalar(parity ? -1 : 1));
  }
  return t;
}

template <typename Scalar>
std::vector<std::complex<Scalar>> hadamard_pure() {
  const Scalar h = Scalar(1) / std::sqrt(Scalar(2));
  return {h, h, h, -h};
}

template LabelledTensor<double> doubled(const std::vector<std::complex<double>>&, std::vector<std::size_t>);
template LabelledTensor<long double> doubled(const std::vector<std::complex<long double>>&, std::vector<std::size_t>);

}  // namespace detail

template <typename Scalar>
CPMapT<Scalar> interpret_as(const ConcreteDiagram& d, const OracleOptions& opts) {
  d.validate();
  const std::size_t q_in = d.input_width(), q_out = d.output_width();
  if (q_in + q_out > 2 * opts.max_qubits)
    throw OracleError("diagram has " + std::to_string(q_in + q_out) + " boundary qubits, above the limit");
  // One slot per qubit of every wire.
  std::vector<std::size_t> offset(d.wires.size() + 1, 0);
  for (std::size_t w = 0; w < d.wires.size(); ++w) offset[w + 1] = offset[w] + d.wires[w];
  SlotUnion slots(offset.back());
  auto slot = [&](WireId w, std::size_t j) { return offset[w] + j; };
  auto concat_slots = [&](const std::vector<WireId>& ws) {
    std::vector<std::size_t> out;
    for (WireId w : ws)
      for (std::size_t j = 0; j < d.wires[w]; ++j) out.push_back(slot(w, j));
    return out;
  };
  // Pass-through generators identify slots.
  for (const auto& n : d.nodes) {
    switch (n.kind) {
      case NodeKind::Gather:
      case NodeKind::Split: {
        auto a = concat_slots(n.ins), b = concat_slots(n.outs);
        for (std::size_t j = 0; j < a.size(); ++j) slots.unite(a[j], b[j]);
        break;
      }
      case NodeKind::Wire:
        for (std::size_t j = 0; j < d.wires[n.ins[0]]; ++j) slots.unite(slot(n.ins[0], j), slot(n.outs[0], j));
        break;
      case NodeKind::Perm:
        for (std::size_t j = 0; j < n.perm.size(); ++j) slots.unite(slot(n.ins[0], j), slot(n.outs[0], n.perm[j]));
        break;
      case NodeKind::Swap: {
        auto a = concat_slots(n.ins), b = concat_slots({n.outs[1], n.outs[0]});
        for (std::size_t j = 0; j < a.size(); ++j) slots.unite(a[j], b[j]);
        break;
      }
      default:
        break;
    }
  }
  TensorNetwork<Scalar> net(4);
  std::vector<int> uses(offset.back(), 0);
  auto label = [&](std::size_t s) {
    std::size_t l = slots.find(s);
    ++uses[l];
    return l;
  };
  for (const auto& n : d.nodes) {
    switch (n.kind) {
      case NodeKind::Z:
      case NodeKind::X: {
        std::size_t r = n.ins.size() + n.outs.size();
        for (std::size_t i = 0; i < n.phases.size(); ++i) {
          std::vector<std::size_t> legs;
          for (WireId w : n.ins) legs.push_back(label(slot(w, i)));
          for (WireId w : n.outs) legs.push_back(label(slot(w, i)));
          net.add(detail::doubled(detail::spider_pure<Scalar>(n.kind == NodeKind::X, r, n.phases[i]), legs));
        }
        break;
      }
      case NodeKind::Hadamard:
        for (std::size_t i = 0; i < d.wires[n.ins[0]]; ++i)
          net.add(detail::doubled(detail::hadamard_pure<Scalar>(), {label(slot(n.ins[0], i)), label(slot(n.outs[0], i))}));
        break;
      case NodeKind::Ground:
        for (std::size_t i = 0; i < d.wires[n.ins[0]]; ++i)
          net.add(LabelledTensor<Scalar>{{label(slot(n.ins[0], i))}, {1, 0, 0, 1}});
        break;
      case NodeKind::Cup:
      case NodeKind::Cap: {
        const auto& legs = n.kind == NodeKind::Cup ? n.outs : n.ins;
        std::vector<std::complex<Scalar>> bell = {1, 0, 0, 1};
        for (std::size_t i = 0; i < d.wires[legs[0]]; ++i)
          net.add(detail::doubled(bell, {label(slot(legs[0], i)), label(slot(legs[1], i))}));
        break;
      }
      default:
        break;
    }
  }
  std::vector<std::size_t> open_out, open_in;
  for (std::size_t s : concat_slots(d.outputs)) open_out.push_back(label(s));
  std::vector<std::size_t> fresh;
  std::size_t next_label = offset.back();
  for (std::size_t s : concat_slots(d.inputs)) {
    std::size_t l = label(s);
    // An input wired straight to an output or another input needs a tensor
    // of its own so that both ends stay open.
    if (uses[l] > 2 || std::find(open_out.begin(), open_out.end(), l) != open_out.end() ||
        std::find(open_in.begin(), open_in.end(), l) != open_in.end()) {
      std::size_t f = next_label++;
      std::vector<std::complex<Scalar>> id(16, std::complex<Scalar>{});
      for (std::size_t k = 0; k < 4; ++k) id[k * 4 + k] = 1;
      net.add(LabelledTensor<Scalar>{{l, f}, id});
      open_in.push_back(f);
    } else {
      open_in.push_back(l);
    }
  }
  // Closed loops of plain wires contribute a factor 4 each.
  Scalar loops = 1;
  for (std::size_t s = 0; s < offset.back(); ++s)
    if (slots.find(s) == s && uses[s] == 0) loops *= 4;
  std::vector<std::size_t> open = open_out;
  open.insert(open.end(), open_in.begin(), open_in.end());
  auto t = net.contract_all(open, opts.max_intermediate);
  CPMapT<Scalar> out;
  out.q_in = q_in;
  out.q_out = q_out;
  const auto rows = static_cast<Eigen::Index>(detail::ipow(4, q_out));
  const auto cols = static_cast<Eigen::Index>(detail::ipow(4, q_in));
  out.m.resize(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r)
    for (Eigen::Index c = 0; c < cols; ++c) out.m(r, c) = loops * t.data[static_cast<std::size_t>(r * cols + c)];
  return out;
}

template struct CPMapT<double>;
template struct CPMapT<long double>;
template CPMapT<double> interpret_as<double>(const ConcreteDiagram&, const OracleOptions&);
template CPMapT<long double> interpret_as<long double>(const ConcreteDiagram&, const OracleOptions&);

double cpm_residual(const CPMap& a, const CPMap& b) {
  if (a.m.rows() != b.m.rows() || a.m.cols() != b.m.cols())
    throw OracleError("cannot compare maps of shapes " + std::to_string(a.m.rows()) + "x" +
                      std::to_string(a.m.cols()) + " and " + std::to_string(b.m.rows()) + "x" +
                      std::to_string(b.m.cols()));
  const double na = a.m.norm(), nb = b.m.norm();
  const double tiny = 1e-300;
  if (na < tiny && nb < tiny) return 0.0;
  if (na < tiny || nb < tiny) return 2.0;
  return (a.m / na - b.m / nb).norm();
}

bool cpm_equal_mod_scalar(const CPMap& a, const CPMap& b, double tol) { return cpm_residual(a, b) <= tol; }

bool cpm_equal_exact(const CPMap& a, const CPMap& b, double tol) {
  if (a.m.rows() != b.m.rows() || a.m.cols() != b.m.cols()) throw OracleError("cannot compare maps of different shapes");
  return (a.m - b.m).cwiseAbs().maxCoeff() <= tol;
}

std::string cpmap_to_json(const CPMap& a) {
  nlohmann::json re = nlohmann::json::array(), im = nlohmann::json::array();
  for (Eigen::Index r = 0; r < a.m.rows(); ++r) {
    nlohmann::json rr = nlohmann::json::array(), ii = nlohmann::json::array();
    for (Eigen::Index c = 0; c < a.m.cols(); ++c) {
      rr.push_back(a.m(r, c).real());
      ii.push_back(a.m(r, c).imag());
    }
    re.push_back(rr);
    im.push_back(ii);
  }
  nlohmann::json j;
  j["q_in"] = a.q_in;
  j["q_out"] = a.q_out;
  j["re"] = re;
  j["im"] = im;
  return j.dump();
}

}  // namespace szxc
