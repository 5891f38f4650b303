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

#include <optional>

#include "upkit/components.hpp"
#include "upkit/pieces.hpp"

namespace upkit {

// t_c as a checked character of P(λ); c must lie in 𝕁(λ).
inline int t_character(const ClassPartition& cp, Part c, const CharFn& e) {
  if (!set_contains(piece_data(cp).J, c))
    throw Error(Errc::NotInJ, std::to_string(c) + " is not in J(lambda)");
  return t_value(c, e);
}

// The J with T_J(λ) = μ, if μ ∈ Spc(λ).
inline std::optional<IntSet> piece_index(const ClassPartition& lam, const Partition& mu) {
  for (const auto& m : special_piece(lam))
    if (m.mu.lambda() == mu) return m.J;
  return std::nullopt;
}

inline bool is_primitive(const ClassPartition& lam, const CharFn& e, const Partition& mu) {
  if (!in_canonical_subgroup(lam, e))
    throw Error(Errc::NotCanonical, set_str(e.set) + " is not in the canonical subgroup");
  auto J = piece_index(lam, mu);
  if (!J) throw Error(Errc::NotInPiece, "(" + mu.str() + ") is not in Spc(" + lam.lambda().str() + ")");
  for (Part c : *J)
    if (t_value(c, e) == 1) return false;
  return true;
}

// ι*_{μ,λ}: S†(λ) -> S†(μ), as block indices. The λ-block goes to the μ-block
// whose interval covers it.
inline std::vector<int> iota_star(const ClassPartition& mu, const ClassPartition& lam) {
  BlockStructure bl = block_structure(lam), bm = block_structure(mu);
  std::vector<int> out;
  for (const Block& b : bl.blocks) {
    int target = -1;
    for (std::size_t i = 0; i < bm.blocks.size(); ++i) {
      const Block& c = bm.blocks[i];
      if (c.lo <= b.min && b.max <= c.hi) {
        target = static_cast<int>(i);
        break;
      }
    }
    if (target < 0)
      throw Error(Errc::MalformedOutput, "block of (" + lam.lambda().str() + ") not covered by (" +
                                             mu.lambda().str() + ")");
    out.push_back(target);
  }
  return out;
}

// ι_{μ,λ}: P†(μ)_0 -> P†(λ)_0, the pullback along ι*.
inline CharFn iota_embed(const ClassPartition& mu, const ClassPartition& lam, const CharFn& e) {
  if (!piece_index(lam, mu.lambda()))
    throw Error(Errc::NotInPiece, "(" + mu.lambda().str() + ") is not in Spc(" + lam.lambda().str() + ")");
  if (!in_canonical_subgroup(mu, e))
    throw Error(Errc::NotCanonical, set_str(e.set) + " is not in the canonical subgroup of (" +
                                        mu.lambda().str() + ")");
  BlockStructure bl = block_structure(lam), bm = block_structure(mu);
  std::vector<int> star = iota_star(mu, lam);
  IntSet out;
  for (std::size_t i = 0; i < bl.blocks.size(); ++i) {
    const Block& target = bm.blocks[star[i]];
    if (e.has(target.elems.front()))
      out.insert(out.end(), bl.blocks[i].elems.begin(), bl.blocks[i].elems.end());
  }
  return CharFn(out);
}

}  // namespace upkit
