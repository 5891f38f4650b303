/*
 * Copyright 2026 The upkit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

// Character-theoretic model of W_n = (Z/2)^n ⋊ S_n for small n, built from
// first principles: permutation characters of Young subgroups, Jacobi–Trudi,
// explicit class enumeration, and induction from W_a × W_b. It shares no code
// with the Littlewood–Richardson path in wreps.hpp.

#include <map>
#include <numeric>
#include <vector>

#include "upkit/wreps.hpp"

namespace upkit::oracle {

inline constexpr Part kMaxRank = 6;

// Signed cycle type of an element of W_n.
struct SignedType {
  Partition pos, neg;
  friend bool operator==(const SignedType&, const SignedType&) = default;
  friend auto operator<=>(const SignedType&, const SignedType&) = default;
};

// g acts by i -> sign[i] * (perm[i] + 1).
struct SignedPerm {
  std::vector<int> perm;
  std::vector<int> sign;
};

inline SignedType type_of(const SignedPerm& g) {
  const std::size_t n = g.perm.size();
  std::vector<bool> seen(n, false);
  std::vector<Part> pos, neg;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    Part len = 0;
    int prod = 1;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(g.perm[j])) {
      seen[j] = true;
      ++len;
      prod *= g.sign[j];
    }
    (prod == 1 ? pos : neg).push_back(len);
  }
  return {Partition(pos), Partition(neg)};
}

inline void for_each_element(Part n, const std::function<void(const SignedPerm&)>& fn) {
  SignedPerm g;
  g.perm.resize(static_cast<std::size_t>(n));
  std::iota(g.perm.begin(), g.perm.end(), 0);
  do {
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      g.sign.assign(static_cast<std::size_t>(n), 1);
      for (Part i = 0; i < n; ++i)
        if (mask >> i & 1) g.sign[static_cast<std::size_t>(i)] = -1;
      fn(g);
    }
  } while (std::next_permutation(g.perm.begin(), g.perm.end()));
}

inline Part factorial(Part n) { return n <= 1 ? 1 : n * factorial(n - 1); }
inline Part group_order(Part n) { return factorial(n) << n; }

// Class sizes of W_n by direct enumeration of its elements.
inline const std::map<SignedType, Part>& class_sizes(Part n) {
  static std::map<Part, std::map<SignedType, Part>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  if (n > kMaxRank) throw Error(Errc::BoundExceeded, "oracle limited to n <= 6");
  std::map<SignedType, Part> sizes;
  if (n == 0) sizes[{}] = 1;
  else for_each_element(n, [&](const SignedPerm& g) { ++sizes[type_of(g)]; });
  return cache[n] = sizes;
}

// Value of the permutation character 1↑_{S_c}^{S_n}, for a composition c,
// at cycle type rho: the number of ways to split the cycles into blocks of sizes c.
inline Part young_perm_char(const std::vector<Part>& comp, const Partition& rho) {
  for (Part c : comp)
    if (c < 0) return 0;
  std::vector<Part> left(comp);
  Part ways = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == rho.length()) {
      for (Part x : left)
        if (x != 0) return;
      ++ways;
      return;
    }
    Part len = rho.parts()[idx];
    for (auto& x : left)
      if (x >= len) {
        x -= len;
        rec(idx + 1);
        x += len;
      }
  };
  rec(0);
  return ways;
}

// χ_λ(ρ) via Jacobi–Trudi: det(h_{λ_i - i + j}).
inline Part sn_char(const Partition& lambda, const Partition& rho) {
  const std::size_t l = lambda.length();
  if (l == 0) return 1;
  std::vector<int> sigma(l);
  std::iota(sigma.begin(), sigma.end(), 0);
  Part total = 0;
  do {
    int inv = 0;
    for (std::size_t i = 0; i < l; ++i)
      for (std::size_t j = i + 1; j < l; ++j)
        if (sigma[i] > sigma[j]) ++inv;
    std::vector<Part> comp;
    bool neg = false;
    for (std::size_t i = 0; i < l; ++i) {
      Part v = lambda.at(i + 1) - static_cast<Part>(i) + sigma[i];
      if (v < 0) neg = true;
      if (v > 0) comp.push_back(v);
    }
    if (neg) continue;
    Part val = young_perm_char(comp, rho);
    total += (inv % 2 ? -val : val);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total;
}

using ClassFn = std::map<SignedType, Part>;

// ind_{W_a × W_b}^{W_n} of a class function on W_a × W_b given by f(c1, c2).
inline ClassFn induce_from_product(Part a, Part b,
                                   const std::function<Part(const SignedType&, const SignedType&)>& f) {
  const Part n = a + b;
  const auto& cg = class_sizes(n);
  const auto& ca = class_sizes(a);
  const auto& cb = class_sizes(b);
  ClassFn out;
  for (auto [g, size] : cg) out[g] = 0;
  // ind φ(g) = |C_G(g)| / |H| · Σ_{H-classes c ⊆ cl(g)} |c| φ(c)
  std::map<SignedType, Part> acc;
  for (auto [c1, s1] : ca)
    for (auto [c2, s2] : cb) {
      SignedType fused{union_of(c1.pos, c2.pos), union_of(c1.neg, c2.neg)};
      acc[fused] += s1 * s2 * f(c1, c2);
    }
  const Part H = group_order(a) * group_order(b);
  for (auto [g, sum] : acc) {
    Part cent = group_order(n) / cg.at(g);
    out[g] = cent * sum / H;
  }
  return out;
}

// Irreducible character of (α,β): ind from W_a × W_b of V_α ⊠ (V_β ⊗ χ).
inline const ClassFn& irreducible(const Bipartition& x) {
  static std::map<Bipartition, ClassFn> cache;
  auto it = cache.find(x);
  if (it != cache.end()) return it->second;
  Part a = x.alpha.total(), b = x.beta.total();
  ClassFn chi = induce_from_product(a, b, [&](const SignedType& c1, const SignedType& c2) {
    Part va = sn_char(x.alpha, union_of(c1.pos, c1.neg));
    Part vb = sn_char(x.beta, union_of(c2.pos, c2.neg));
    return c2.neg.length() % 2 ? -va * vb : va * vb;
  });
  return cache[x] = chi;
}

inline Part inner(Part n, const ClassFn& f, const ClassFn& g) {
  Part s = 0;
  for (auto [c, size] : class_sizes(n)) s += size * f.at(c) * g.at(c);
  return s / group_order(n);
}

// ⟨ind_{W_i × W_{n-i}} x ⊠ y, t⟩ for every irreducible t of W_n.
inline WRep oracle_mult(const Bipartition& x, const Bipartition& y) {
  const Part n = x.n() + y.n();
  if (n > kMaxRank) throw Error(Errc::BoundExceeded, "oracle limited to n <= 6");
  const ClassFn& cx = irreducible(x);
  const ClassFn& cy = irreducible(y);
  ClassFn ind = induce_from_product(x.n(), y.n(), [&](const SignedType& c1, const SignedType& c2) {
    return cx.at(c1) * cy.at(c2);
  });
  WRep out;
  for (const auto& t : all_bipartitions(n)) {
    Part m = inner(n, ind, irreducible(t));
    if (m) out[t] = m;
  }
  return out;
}

// (1/|H|) Σ_{h ∈ H} χ_π(h) over the elements of H = W_i × W_{n-i}.
inline Part fixed_dim_brute_force(const Bipartition& pi, Part i) {
  const Part n = pi.n();
  const ClassFn& chi = irreducible(pi);
  Part sum = 0, count = 0;
  for_each_element(i, [&](const SignedPerm& g1) {
    for_each_element(n - i, [&](const SignedPerm& g2) {
      SignedPerm g;
      g.perm = g1.perm;
      g.sign = g1.sign;
      for (std::size_t k = 0; k < g2.perm.size(); ++k) {
        g.perm.push_back(g2.perm[k] + static_cast<int>(i));
        g.sign.push_back(g2.sign[k]);
      }
      sum += chi.at(type_of(g));
      ++count;
    });
  });
  return sum / count;
}

}  // namespace upkit::oracle
