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

#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "upkit/partition.hpp"

namespace upkit {

// A character of A(O_λ), as the subset A ⊆ S(λ) where it is nontrivial.
struct CharFn {
  IntSet set;

  CharFn() = default;
  explicit CharFn(IntSet s) : set(make_set(std::move(s))) {}

  bool has(Part c) const { return set_contains(set, c); }
  int value(Part c) const { return has(c) ? 1 : 0; }

  friend bool operator==(const CharFn&, const CharFn&) = default;
  friend auto operator<=>(const CharFn&, const CharFn&) = default;
};

inline CharFn operator^(const CharFn& a, const CharFn& b) {
  IntSet out;
  std::set_symmetric_difference(a.set.begin(), a.set.end(), b.set.begin(), b.set.end(),
                                std::back_inserter(out));
  return CharFn(std::move(out));
}

inline bool in_P0(const ClassPartition& cp, const CharFn& e) {
  return set_intersect(e.set, cp.S0()).size() % 2 == 0;
}

inline bool in_Pprime(const CharFn& e) { return e.set.size() % 2 == 0; }

// Sign string over increasing S(λ); '-' marks membership.
inline std::string sign_string(const ClassPartition& cp, const CharFn& e) {
  std::string out;
  for (Part c : cp.S()) out += e.has(c) ? '-' : '+';
  return out;
}

inline CharFn parse_charfn(const ClassPartition& cp, std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (!text.empty() && text.front() == '(' && text.back() == ')')
    text = text.substr(1, text.size() - 2);
  CharFn e;
  if (!text.empty() && text.front() == '{') {
    if (text.back() != '}') throw Error(Errc::ParseError, "unterminated set '" + std::string(text) + "'");
    Partition p = Partition::parse(text.substr(1, text.size() - 2));
    e = CharFn(p.support());
    if (p.length() != e.set.size()) throw Error(Errc::ParseError, "repeated element in set");
  } else {
    if (text.size() != cp.S().size())
      throw Error(Errc::ParseError, "sign string length " + std::to_string(text.size()) +
                                        " != |S(lambda)| = " + std::to_string(cp.S().size()));
    IntSet v;
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] == '-') v.push_back(cp.S()[i]);
      else if (text[i] != '+') throw Error(Errc::ParseError, "sign strings use only '+' and '-'");
    }
    e = CharFn(v);
  }
  if (!set_subset(e.set, cp.S()))
    throw Error(Errc::ParseError, set_str(e.set) + " is not a subset of S(lambda) = " + set_str(cp.S()));
  return e;
}

// All subsets of S(λ) with the given predicate, ordered by bitmask over increasing S.
template <class Pred>
std::vector<CharFn> subsets_of(const IntSet& S, Pred pred) {
  std::vector<CharFn> out;
  std::uint64_t total = std::uint64_t{1} << S.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    IntSet v;
    for (std::size_t i = 0; i < S.size(); ++i)
      if (mask >> i & 1) v.push_back(S[i]);
    CharFn e(std::move(v));
    if (pred(e)) out.push_back(std::move(e));
  }
  return out;
}

// The two readings of the s=+1 pair chains. `Span` starts the chain right after
// μ_{α_{r-2j-1}} (with α_0 = 0); `Literal` starts it at μ_{α_{r-2j}}.
enum class ChainReading { Span, Literal };

inline constexpr ChainReading kDefaultChainReading = ChainReading::Literal;

inline constexpr Part kInfinity = std::numeric_limits<Part>::max() / 4;

struct Block {
  IntSet elems;  // consecutive elements of S(λ)
  Part min = 0, max = 0;
  // Interval of λ covered by the block; lo = 0 for the lowest type-C block
  // when r is odd, hi = kInfinity for the topmost type-B block.
  Part lo = 0, hi = 0;
};

struct BlockStructure {
  std::vector<Block> blocks;  // increasing

  int block_of(Part c) const {
    for (std::size_t i = 0; i < blocks.size(); ++i)
      if (set_contains(blocks[i].elems, c)) return static_cast<int>(i);
    return -1;
  }
};

inline BlockStructure block_structure(const ClassPartition& cp,
                                      ChainReading reading = kDefaultChainReading) {
  const IntSet& mu = cp.S();
  const int k = static_cast<int>(mu.size());
  std::vector<int> alpha{0};  // alpha[0] = 0, alpha[1..r] 1-based positions
  for (int i = 1; i <= k; ++i)
    if (set_contains(cp.S0(), mu[i - 1])) alpha.push_back(i);
  const int r = static_cast<int>(alpha.size()) - 1;

  // Union-find over consecutive runs reduces to interval labelling.
  std::vector<int> parent(k + 1);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  auto chain = [&](int from, int to) {
    for (int i = from; i < to; ++i) parent[find(i + 1)] = find(i);
  };

  int bottom_pos = 0, top_pos = 0;
  if (cp.s() == -1) {
    for (int j = 0; j < r / 2; ++j) chain(alpha[r - 2 * j - 1], alpha[r - 2 * j]);
    if (r % 2 == 1) {
      chain(1, alpha[1]);
      bottom_pos = 1;
    }
  } else if (r >= 1) {
    chain(alpha[r], k);
    top_pos = k;
    for (int j = 1; 2 * j < r; ++j) {
      int from = reading == ChainReading::Span ? alpha[r - 2 * j - 1] + 1 : alpha[r - 2 * j];
      chain(from, alpha[r - 2 * j + 1]);
    }
  }

  BlockStructure bs;
  for (int i = 1; i <= k; ++i) {
    if (i == 1 || find(i) != find(i - 1)) bs.blocks.emplace_back();
    bs.blocks.back().elems.push_back(mu[i - 1]);
  }
  for (auto& b : bs.blocks) {
    b.min = b.lo = b.elems.front();
    b.max = b.hi = b.elems.back();
    if (bottom_pos && b.min == mu[bottom_pos - 1]) b.lo = 0;
    if (top_pos && b.max == mu[top_pos - 1]) b.hi = kInfinity;
  }
  return bs;
}

// Â(O_λ)_0 realized as P(λ)_0.
inline std::vector<CharFn> char_group(const ClassPartition& cp) {
  return subsets_of(cp.S(), [&](const CharFn& e) { return in_P0(cp, e); });
}

inline bool is_block_constant(const BlockStructure& bs, const CharFn& e) {
  for (const auto& b : bs.blocks) {
    std::size_t hits = set_intersect(e.set, b.elems).size();
    if (hits != 0 && hits != b.elems.size()) return false;
  }
  return true;
}

inline bool in_canonical_subgroup(const ClassPartition& cp, const CharFn& e,
                                  ChainReading reading = kDefaultChainReading) {
  return set_subset(e.set, cp.S()) && in_P0(cp, e) &&
         is_block_constant(block_structure(cp, reading), e);
}

// P†(λ)_0, realizing A†(O_λ).
inline std::vector<CharFn> canonical_subgroup(const ClassPartition& cp,
                                              ChainReading reading = kDefaultChainReading) {
  BlockStructure bs = block_structure(cp, reading);
  return subsets_of(cp.S(), [&](const CharFn& e) { return in_P0(cp, e) && is_block_constant(bs, e); });
}

// t_c(A) without the c ∈ 𝕁(λ) check; see t_character for the checked form.
inline int t_value(Part c, const CharFn& e) {
  int hits = c == 1 ? e.value(2) : e.value(c - 1) + e.value(c + 1);
  return hits % 2 == 0 ? 1 : -1;
}

}  // namespace upkit
