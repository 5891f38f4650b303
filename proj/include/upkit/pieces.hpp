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

#include <vector>

#include "upkit/components.hpp"
#include "upkit/partition.hpp"

namespace upkit {

struct PieceData {
  BlockStructure blocks;
  IntSet I;                    // 𝕀(λ)
  IntSet J;                    // 𝕁(λ)
  std::vector<int> admissible; // indices into blocks.blocks
  Partition sharp;             // λ^#
};

inline bool block_admissible(const BlockStructure& bs, const ClassPartition& cp, std::size_t idx) {
  const Block& b = bs.blocks[idx];
  for (const Block& other : bs.blocks)
    if (other.max == b.lo - 2) return true;
  if (b.lo == 2 && b.max == 2) return true;
  return b.lo == 2 && set_contains(cp.S0(), 2) && b.max > 2;
}

inline PieceData piece_data(const ClassPartition& cp, ChainReading reading = kDefaultChainReading) {
  PieceData pd;
  pd.blocks = block_structure(cp, reading);
  auto inside = [&](Part c) {
    for (const Block& b : pd.blocks.blocks)
      if (b.lo <= c && c <= b.hi) return true;
    return false;
  };
  std::map<Part, Part> sharp;
  for (auto [c, m] : cp.lambda().multiplicities()) {
    if (good_parity(c, cp.s())) continue;
    if (inside(c)) pd.I.push_back(c);
    else sharp[c] = m / 2;
  }
  pd.sharp = Partition::from_multiplicities(sharp);
  for (std::size_t i = 0; i < pd.blocks.blocks.size(); ++i) {
    if (block_admissible(pd.blocks, cp, i)) {
      pd.admissible.push_back(static_cast<int>(i));
      pd.J.push_back(pd.blocks.blocks[i].lo - 1);
    }
  }
  pd.J = make_set(pd.J);
  return pd;
}

inline bool is_special(const ClassPartition& cp) { return piece_data(cp).I.empty(); }

// T_J(λ): add (c,c), remove (c-1,c+1) for c ∈ J, reading (0,2) as (2).
inline ClassPartition T_down(const ClassPartition& cp, const IntSet& J) {
  const IntSet& jl = piece_data(cp).J;
  if (!set_subset(J, jl))
    throw Error(Errc::NotInJ, set_str(J) + " is not contained in J(lambda) = " + set_str(jl));
  std::vector<Part> add, remove;
  for (Part c : J) {
    add.insert(add.end(), {c, c});
    if (c > 1) remove.push_back(c - 1);
    remove.push_back(c + 1);
  }
  Partition out = union_of(difference(cp.lambda(), Partition(remove)), Partition(add));
  return classify(out, cp.gt());
}

// T^I(λ), inverse of T_J.
inline ClassPartition T_up(const ClassPartition& cp, const IntSet& I) {
  const IntSet& il = piece_data(cp).I;
  if (!set_subset(I, il))
    throw Error(Errc::NotInI, set_str(I) + " is not contained in I(lambda) = " + set_str(il));
  std::vector<Part> add, remove;
  for (Part c : I) {
    remove.insert(remove.end(), {c, c});
    if (c > 1) add.push_back(c - 1);
    add.push_back(c + 1);
  }
  Partition out = union_of(difference(cp.lambda(), Partition(remove)), Partition(add));
  return classify(out, cp.gt());
}

struct PieceMember {
  IntSet J;
  ClassPartition mu;
};

// Spc(λ) = {T_J(λ) : J ⊆ 𝕁(λ)}, ordered by the bitmask of J over increasing 𝕁(λ).
inline std::vector<PieceMember> special_piece(const ClassPartition& cp) {
  const IntSet jl = piece_data(cp).J;
  std::vector<PieceMember> out;
  for (const CharFn& sub : subsets_of(jl, [](const CharFn&) { return true; }))
    out.push_back({sub.set, T_down(cp, sub.set)});
  return out;
}

// Largest partition in P^s below p in dominance order.
inline Partition collapse(const Partition& p, int s) {
  std::vector<Part> v = p.parts();
  for (;;) {
    auto m = Partition(v).multiplicities();
    Part q = 0;
    for (auto it = m.rbegin(); it != m.rend(); ++it)
      if (it->second % 2 == 1 && !good_parity(it->first, s)) {
        q = it->first;
        break;
      }
    if (q == 0) break;
    std::size_t last = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] == q) last = i;
    v[last] -= 1;
    std::size_t j = last + 1;
    while (j < v.size() && v[j] >= q - 1) ++j;
    if (j < v.size()) v[j] += 1;
    else v.push_back(1);
    std::erase(v, 0);
    std::sort(v.begin(), v.end(), std::greater<>());
  }
  return Partition(v);
}

// Duality d: P^s(N) -> P^{-s}(N - s). Transpose, shift by one box, collapse.
inline ClassPartition bvls_dual(const ClassPartition& cp) {
  std::vector<Part> t = transpose(cp.lambda()).parts();
  if (cp.s() == 1) {
    if (!t.empty()) {
      t.back() -= 1;
      if (t.back() == 0) t.pop_back();
    }
  } else {
    if (t.empty()) t.push_back(1);
    else t.front() += 1;
  }
  return classify(collapse(Partition(t), -cp.s()), cp.gt().dual());
}

}  // namespace upkit
