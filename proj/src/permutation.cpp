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

#include "szxc/permutation.hpp"

#include <numeric>

namespace szxc {

bool is_permutation(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  for (std::size_t x : p) {
    if (x >= p.size() || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

Permutation inverse(const Permutation& p) {
  Permutation q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[p[i]] = i;
  return q;
}

Permutation identity_permutation(std::size_t k) {
  Permutation p(k);
  std::iota(p.begin(), p.end(), std::size_t{0});
  return p;
}

bool is_identity(const Permutation& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != i) return false;
  return true;
}

Permutation then(const Permutation& p, const Permutation& q) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
  return r;
}

Permutation direct_sum(const Permutation& p, const Permutation& q) {
  Permutation r = p;
  for (std::size_t x : q) r.push_back(x + p.size());
  return r;
}

Permutation build_interleave(const std::vector<std::vector<Nat>>& sizes) {
  std::size_t parts = 0;
  for (const auto& e : sizes) parts = std::max(parts, e.size());
  auto size = [&](std::size_t e, std::size_t i) -> std::size_t { return i < sizes[e].size() ? sizes[e][i] : 0; };
  // Start of each (part, element) block in the grouped order.
  std::vector<std::vector<std::size_t>> grouped(sizes.size(), std::vector<std::size_t>(parts));
  std::size_t at = 0;
  for (std::size_t i = 0; i < parts; ++i)
    for (std::size_t e = 0; e < sizes.size(); ++e) {
      grouped[e][i] = at;
      at += size(e, i);
    }
  Permutation p;
  p.reserve(at);
  for (std::size_t e = 0; e < sizes.size(); ++e)
    for (std::size_t i = 0; i < parts; ++i)
      for (std::size_t o = 0; o < size(e, i); ++o) p.push_back(grouped[e][i] + o);
  return p;
}

Permutation build_sigma(const NatList& ns, const std::function<Nat(Nat)>& v, const std::function<Nat(Nat)>& w) {
  std::vector<std::vector<Nat>> sizes;
  for (Nat n : ns) sizes.push_back({v(n), w(n)});
  return build_interleave(sizes);
}

Permutation build_tau(Nat n, Nat a, Nat b, Nat c) {
  const std::size_t k = a + c + b + c;
  Permutation p(k * n);
  for (std::size_t i = 0; i < p.size(); ++i) {
    std::size_t r = i % k, j = i / k;
    if (r < a)
      p[i] = r + a * j;
    else if (r < a + c)
      p[i] = r + c * j + a * (n - 1);
    else if (r < a + c + b)
      p[i] = r + b * j + (a + c) * (n - 1);
    else
      p[i] = r + c * j + (a + c + b) * (n - 1);
  }
  return p;
}

}  // namespace szxc
