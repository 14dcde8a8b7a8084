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

#include <algorithm>
#include <complex>
#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "szxc/error.hpp"

namespace szxc {

/// Dense tensor whose legs all have the same dimension; leg 0 is the most
/// significant index. Legs are labelled so that networks contract by name.
template <typename Scalar>
struct LabelledTensor {
  using Complex = std::complex<Scalar>;
  std::vector<std::size_t> legs;
  std::vector<Complex> data;
};

namespace detail {

inline std::size_t ipow(std::size_t base, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= base;
  return r;
}

/// Reorders the legs of t so that they appear in `order` (a permutation of
/// t.legs).
template <typename Scalar>
LabelledTensor<Scalar> transpose(const LabelledTensor<Scalar>& t, const std::vector<std::size_t>& order,
                                 std::size_t dim) {
  const std::size_t r = t.legs.size();
  std::vector<std::size_t> from(r);
  for (std::size_t i = 0; i < r; ++i)
    from[i] = static_cast<std::size_t>(std::find(t.legs.begin(), t.legs.end(), order[i]) - t.legs.begin());
  bool same = true;
  for (std::size_t i = 0; i < r; ++i) same = same && from[i] == i;
  if (same) return t;
  std::vector<std::size_t> stride(r, 1);
  for (std::size_t i = r; i-- > 1;) stride[i - 1] = stride[i] * dim;
  LabelledTensor<Scalar> out;
  out.legs = order;
  out.data.resize(t.data.size());
  std::vector<std::size_t> idx(r, 0);
  for (std::size_t flat = 0; flat < out.data.size(); ++flat) {
    std::size_t src = 0;
    for (std::size_t i = 0; i < r; ++i) src += idx[i] * stride[from[i]];
    out.data[flat] = t.data[src];
    for (std::size_t i = r; i-- > 0;) {
      if (++idx[i] < dim) break;
      idx[i] = 0;
    }
  }
  return out;
}

/// Sums over pairs of equal labels inside one tensor.
template <typename Scalar>
LabelledTensor<Scalar> self_trace(const LabelledTensor<Scalar>& t, std::size_t dim) {
  std::map<std::size_t, int> count;
  for (auto l : t.legs) ++count[l];
  std::vector<std::size_t> traced, free;
  for (auto l : t.legs) {
    if (count[l] == 2) {
      if (std::find(traced.begin(), traced.end(), l) == traced.end()) traced.push_back(l);
    } else if (count[l] == 1) {
      free.push_back(l);
    } else {
      throw OracleError("a leg label occurs more than twice in one tensor");
    }
  }
  if (traced.empty()) return t;
  const std::size_t r = t.legs.size();
  std::vector<std::size_t> stride(r, 1);
  for (std::size_t i = r; i-- > 1;) stride[i - 1] = stride[i] * dim;
  LabelledTensor<Scalar> out;
  out.legs = free;
  out.data.assign(ipow(dim, free.size()), {});
  std::vector<std::size_t> idx(r, 0);
  for (std::size_t flat = 0; flat < t.data.size(); ++flat) {
    bool diag = true;
    for (auto l : traced) {
      std::size_t a = r, b = r;
      for (std::size_t i = 0; i < r; ++i)
        if (t.legs[i] == l) (a == r ? a : b) = i;
      diag = diag && idx[a] == idx[b];
    }
    if (diag) {
      std::size_t dst = 0;
      for (auto l : free) {
        std::size_t i = static_cast<std::size_t>(std::find(t.legs.begin(), t.legs.end(), l) - t.legs.begin());
        dst = dst * dim + idx[i];
      }
      out.data[dst] += t.data[flat];
    }
    for (std::size_t i = r; i-- > 0;) {
      if (++idx[i] < dim) break;
      idx[i] = 0;
    }
  }
  return out;
}

}  // namespace detail

/// Contracts every label shared by a and b with one matrix product.
template <typename Scalar>
LabelledTensor<Scalar> contract(const LabelledTensor<Scalar>& a, const LabelledTensor<Scalar>& b, std::size_t dim) {
  using Matrix = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  std::vector<std::size_t> shared, fa, fb;
  for (auto l : a.legs) (std::find(b.legs.begin(), b.legs.end(), l) != b.legs.end() ? shared : fa).push_back(l);
  for (auto l : b.legs)
    if (std::find(shared.begin(), shared.end(), l) == shared.end()) fb.push_back(l);
  std::vector<std::size_t> oa = fa, ob = shared;
  oa.insert(oa.end(), shared.begin(), shared.end());
  ob.insert(ob.end(), fb.begin(), fb.end());
  auto ta = detail::transpose(a, oa, dim);
  auto tb = detail::transpose(b, ob, dim);
  const auto rows = static_cast<Eigen::Index>(detail::ipow(dim, fa.size()));
  const auto inner = static_cast<Eigen::Index>(detail::ipow(dim, shared.size()));
  const auto cols = static_cast<Eigen::Index>(detail::ipow(dim, fb.size()));
  Eigen::Map<const Matrix> ma(ta.data.data(), rows, inner);
  Eigen::Map<const Matrix> mb(tb.data.data(), inner, cols);
  LabelledTensor<Scalar> out;
  out.legs = fa;
  out.legs.insert(out.legs.end(), fb.begin(), fb.end());
  out.data.resize(static_cast<std::size_t>(rows * cols));
  Eigen::Map<Matrix> mo(out.data.data(), rows, cols);
  mo.noalias() = ma * mb;
  return out;
}

/// A network of labelled tensors. Each label occurs at most twice in total;
/// labels occurring once are open.
template <typename Scalar>
class TensorNetwork {
 public:
  explicit TensorNetwork(std::size_t dim) : dim_(dim) {}

  void add(LabelledTensor<Scalar> t) { tensors_.push_back(detail::self_trace(t, dim_)); }
  std::size_t size() const { return tensors_.size(); }

  /// Contracts the whole network greedily (cheapest result first) and
  /// returns a tensor whose legs are `open` in that order. Throws
  /// OracleError when an intermediate result would exceed `max_legs`.
  LabelledTensor<Scalar> contract_all(const std::vector<std::size_t>& open, std::size_t max_legs = 12) {
    auto ts = tensors_;
    if (ts.empty()) ts.push_back({{}, {std::complex<Scalar>(1)}});
    while (ts.size() > 1) {
      std::size_t best_i = 0, best_j = 1;
      double best = -1;
      bool best_shares = false;
      for (std::size_t i = 0; i < ts.size(); ++i)
        for (std::size_t j = i + 1; j < ts.size(); ++j) {
          std::size_t s = 0;
          for (auto l : ts[i].legs) s += std::count(ts[j].legs.begin(), ts[j].legs.end(), l);
          if (s == 0 && best_shares) continue;
          double rank = static_cast<double>(ts[i].legs.size() + ts[j].legs.size() - 2 * s);
          if ((s > 0 && !best_shares) || best < 0 || rank < best) {
            best = rank;
            best_i = i;
            best_j = j;
            best_shares = s > 0;
          }
        }
      if (best > static_cast<double>(max_legs))
        throw OracleError("contraction needs a tensor with " + std::to_string(static_cast<std::size_t>(best)) +
                          " legs, above the limit of " + std::to_string(max_legs));
      auto c = detail::self_trace(contract(ts[best_i], ts[best_j], dim_), dim_);
      ts.erase(ts.begin() + static_cast<std::ptrdiff_t>(best_j));
      ts[best_i] = std::move(c);
    }
    auto& t = ts.front();
    if (t.legs.size() != open.size()) throw OracleError("open legs of the network do not match the boundary");
    return detail::transpose(t, open, dim_);
  }

 private:
  std::size_t dim_;
  std::vector<LabelledTensor<Scalar>> tensors_;
};

}  // namespace szxc
