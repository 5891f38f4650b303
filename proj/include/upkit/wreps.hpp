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

#include <map>
#include <string>
#include <vector>

#include "upkit/partition.hpp"

namespace upkit {

// Irreducible W_n-representation (α,β).
struct Bipartition {
  Partition alpha, beta;

  Part n() const { return alpha.total() + beta.total(); }

  std::string str() const { return "[" + alpha.str() + "|" + beta.str() + "]"; }

  static Bipartition parse(std::string_view text) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    if (text.size() < 2 || text.front() != '[' || text.back() != ']')
      throw Error(Errc::ParseError, "bipartition must look like [5,3|1,1]");
    text = text.substr(1, text.size() - 2);
    auto bar = text.find('|');
    if (bar == std::string_view::npos) throw Error(Errc::ParseError, "bipartition needs '|'");
    return {Partition::parse(text.substr(0, bar)), Partition::parse(text.substr(bar + 1))};
  }

  friend bool operator==(const Bipartition&, const Bipartition&) = default;
  friend auto operator<=>(const Bipartition&, const Bipartition&) = default;
};

// A representation as a multiset of irreducibles.
using WRep = std::map<Bipartition, Part>;

// E^s_i: ((n-i,i),∅) for s = +1, ((n-i),(i)) for s = -1.
inline Bipartition E(int s, Part n, Part i) {
  if (s == 1) {
    std::vector<Part> a;
    if (n - i > 0) a.push_back(n - i);
    if (i > 0) a.push_back(i);
    return {Partition(a), Partition()};
  }
  std::vector<Part> a, b;
  if (n - i > 0) a.push_back(n - i);
  if (i > 0) b.push_back(i);
  return {Partition(a), Partition(b)};
}

// Valid indices i of E^s_i for W_n.
inline std::vector<Part> E_indices(int s, Part n) {
  std::vector<Part> out;
  for (Part i = 0; i <= (s == 1 ? n / 2 : n); ++i) out.push_back(i);
  return out;
}

inline std::vector<Bipartition> all_bipartitions(Part n) {
  std::vector<Bipartition> out;
  for (Part a = n; a >= 0; --a)
    for_each_partition(a, [&](const Partition& x) {
      for_each_partition(n - a, [&](const Partition& y) { out.push_back({x, y}); });
    });
  return out;
}

// Horizontal strips of size k added to λ.
inline std::vector<Partition> pieri(const Partition& lambda, Part k) {
  std::vector<Partition> out;
  const std::size_t rows = lambda.length() + 1;
  std::vector<Part> add(rows, 0);
  std::function<void(std::size_t, Part)> rec = [&](std::size_t r, Part left) {
    if (r == rows) {
      if (left != 0) return;
      std::vector<Part> v;
      for (std::size_t i = 0; i < rows; ++i) {
        Part p = lambda.at(i + 1) + add[i];
        if (p > 0) v.push_back(p);
      }
      out.push_back(Partition(v));
      return;
    }
    // Row r may grow up to the length of row r-1 in λ.
    Part cap = r == 0 ? left : std::min(left, lambda.at(r) - lambda.at(r + 1));
    for (Part x = cap; x >= 0; --x) {
      add[r] = x;
      rec(r + 1, left - x);
    }
    add[r] = 0;
  };
  rec(0, k);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

inline constexpr Part kLRBound = 24;

// Littlewood–Richardson coefficient c^λ_{μν}: LR fillings of λ/μ with content ν.
inline Part lr_mult(const Partition& mu, const Partition& nu, const Partition& lambda) {
  if (lambda.total() > kLRBound)
    throw Error(Errc::BoundExceeded, "LR coefficients computed only up to size " + std::to_string(kLRBound));
  if (mu.total() + nu.total() != lambda.total()) return 0;
  if (mu.length() > lambda.length()) return 0;
  for (std::size_t i = 1; i <= mu.length(); ++i)
    if (mu.at(i) > lambda.at(i)) return 0;
  if (nu.empty()) return mu == lambda ? 1 : 0;

  // Cells in reading order: rows top to bottom, right to left.
  struct Cell { std::size_t r; Part c; };
  std::vector<Cell> cells;
  for (std::size_t r = 1; r <= lambda.length(); ++r)
    for (Part c = lambda.at(r); c > mu.at(r); --c) cells.push_back({r, c});
  std::map<std::pair<std::size_t, Part>, int> fill;
  std::vector<Part> count(nu.length() + 1, 0);
  Part total = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == cells.size()) {
      ++total;
      return;
    }
    auto [r, c] = cells[idx];
    int hi = static_cast<int>(nu.length());
    auto right = fill.find({r, c + 1});
    if (right != fill.end()) hi = std::min(hi, right->second);
    int lo = 1;
    auto up = fill.find({r - 1, c});
    if (up != fill.end()) lo = up->second + 1;
    for (int v = lo; v <= hi; ++v) {
      if (count[v] >= nu.at(v)) continue;
      if (v > 1 && count[v] + 1 > count[v - 1]) continue;
      ++count[v];
      fill[{r, c}] = v;
      rec(idx + 1);
      fill.erase({r, c});
      --count[v];
    }
  };
  rec(0);
  return total;
}

// ⟨ind_{W_i×W_{n-i}} x⊠y, target⟩.
inline Part induce_mult(const Bipartition& x, const Bipartition& y, const Bipartition& t) {
  if (x.alpha.total() + y.alpha.total() != t.alpha.total()) return 0;
  if (x.beta.total() + y.beta.total() != t.beta.total()) return 0;
  Part a = lr_mult(x.alpha, y.alpha, t.alpha);
  return a == 0 ? 0 : a * lr_mult(x.beta, y.beta, t.beta);
}

inline WRep induce(const Bipartition& x, const Bipartition& y) {
  WRep out;
  for (const auto& t : all_bipartitions(x.n() + y.n())) {
    Part m = induce_mult(x, y, t);
    if (m) out[t] = m;
  }
  return out;
}

inline Part multiplicity(const WRep& pi, const Bipartition& b) {
  auto it = pi.find(b);
  return it == pi.end() ? 0 : it->second;
}

// dim π^{W_i × W_{n-i}} = Σ_{j ≤ min(i,n-i)} ⟨π, E^1_j⟩.
inline Part invariant_dim(const WRep& pi, Part n, Part i) {
  Part d = 0;
  for (Part j = 0; j <= std::min(i, n - i); ++j) d += multiplicity(pi, E(1, n, j));
  return d;
}

// dim Hom_{W_i × W_{n-i}}(sgn^± ⊠ triv, π) = ⟨π, E^{-1}_i⟩.
inline Part sgn_hom_dim(const WRep& pi, Part n, Part i) { return multiplicity(pi, E(-1, n, i)); }

inline bool is_weakly_s_spherical(const WRep& pi, int s) {
  for (const auto& [b, m] : pi) {
    if (m == 0) continue;
    for (Part i : E_indices(s, b.n()))
      if (b == E(s, b.n(), i)) return true;
  }
  return false;
}

inline bool is_E(const Bipartition& b, int s) {
  for (Part i : E_indices(s, b.n()))
    if (b == E(s, b.n(), i)) return true;
  return false;
}

}  // namespace upkit
