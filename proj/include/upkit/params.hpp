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
#include <set>
#include <utility>
#include <vector>

#include "upkit/components.hpp"
#include "upkit/pieces.hpp"
#include "upkit/primitivity.hpp"

namespace upkit {

struct TableEntry {
  Part a = 0, b = 0;

  Part alpha() const { return a + b; }
  Part beta() const { return a - b; }

  friend bool operator==(const TableEntry&, const TableEntry&) = default;
  friend auto operator<=>(const TableEntry&, const TableEntry&) = default;
};

// Good-parity entries satisfy a+b ≡ 0 (s=+1) or a+b ≡ 1 (s=-1) mod 2.
inline bool good_entry(const TableEntry& e, int s) { return ((e.a + e.b) % 2 == 0) == (s == 1); }

// A table; entries keep the order they were built in, compare with `canonical()`.
struct ATable {
  std::vector<TableEntry> entries;
  GroupType gt;
  int z = 1;

  std::vector<TableEntry> canonical() const {
    auto v = entries;
    std::sort(v.begin(), v.end());
    return v;
  }

  // 1-based ids of good-parity entries, I(m^{gp}).
  std::vector<int> gp_ids() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < entries.size(); ++i)
      if (good_entry(entries[i], gt.s)) out.push_back(static_cast<int>(i) + 1);
    return out;
  }

  const TableEntry& entry(int id) const { return entries.at(static_cast<std::size_t>(id - 1)); }

  // S(m): distinct good-parity pairs.
  std::vector<TableEntry> S() const {
    std::set<TableEntry> s;
    for (const auto& e : entries)
      if (good_entry(e, gt.s)) s.insert(e);
    return {s.begin(), s.end()};
  }

  // S(m^{mf}): pairs of odd multiplicity.
  std::vector<TableEntry> S_mf() const {
    std::map<TableEntry, int> m;
    for (const auto& e : entries) ++m[e];
    std::vector<TableEntry> out;
    for (auto [e, k] : m)
      if (k % 2 == 1) out.push_back(e);
    return out;
  }

  // p(m): each a repeated b times.
  Partition partition() const {
    std::vector<Part> v;
    for (const auto& e : entries)
      for (Part r = 0; r < e.b; ++r) v.push_back(e.a);
    return Partition(v);
  }

  bool near_tempered() const {
    for (const auto& e : entries)
      if (good_entry(e, gt.s) && e.b > 2) return false;
    return true;
  }

  friend bool same_table(const ATable& x, const ATable& y) {
    return x.gt == y.gt && x.z == y.z && x.canonical() == y.canonical();
  }
};

inline void validate_sign(int z, const GroupType& gt) {
  if (z != 1 && z != -1) throw Error(Errc::ParityViolation, "z must be +1 or -1");
  if (z == -1 && gt.s == 1)
    throw Error(Errc::ParityViolation, "z = -1 requires a symplectic dual group (dual type C)");
}

inline ATable make_table(std::vector<TableEntry> entries, const GroupType& gt, int z) {
  validate_sign(z, gt);
  ATable m{std::move(entries), gt, z};
  Part total = 0;
  for (const auto& e : m.entries) {
    if (e.a <= 0 || e.b <= 0) throw Error(Errc::ParseError, "table entries must be positive");
    total += e.a * e.b;
  }
  if (total != gt.N) throw Error(Errc::WrongTotal, "table total " + std::to_string(total) + " != N");
  for (const auto& e : m.S_mf())
    if (!good_entry(e, gt.s))
      throw Error(Errc::ParityViolation, "multiplicity-free entry (" + std::to_string(e.a) + "," +
                                             std::to_string(e.b) + ") has wrong parity");
  return m;
}

// i(λ) = {(λ_i, 1)}.
inline std::vector<TableEntry> i_entries(const Partition& p) {
  std::vector<TableEntry> v;
  for (auto it = p.parts().rbegin(); it != p.parts().rend(); ++it) v.push_back({*it, 1});
  return v;
}

// m_{λ,J} = i(λ ∖ ∪_{c∈J}(c-1,c+1)) ∪ {(c,2)}_{c∈J}.
inline ATable near_tempered_table(const ClassPartition& cp, const IntSet& J, int z) {
  const IntSet jl = piece_data(cp).J;
  if (!set_subset(J, jl))
    throw Error(Errc::NotInJ, set_str(J) + " is not contained in J(lambda) = " + set_str(jl));
  std::vector<Part> removed;
  for (Part c : J) {
    if (c > 1) removed.push_back(c - 1);
    removed.push_back(c + 1);
  }
  auto entries = i_entries(difference(cp.lambda(), Partition(removed)));
  for (Part c : J) entries.push_back({c, 2});
  std::sort(entries.begin(), entries.end());
  return make_table(std::move(entries), cp.gt(), z);
}

// Summand z·q^{j2/2} ⊗ ν_k.
struct LSummand {
  int z = 1;
  Part j2 = 0;
  Part k = 1;

  friend bool operator==(const LSummand&, const LSummand&) = default;
  friend auto operator<=>(const LSummand&, const LSummand&) = default;
};

struct LParam {
  std::vector<LSummand> summands;  // sorted
  GroupType gt;

  void normalize() { std::sort(summands.begin(), summands.end()); }

  // λ(φ): the multiset of the k's.
  Partition lambda() const {
    std::vector<Part> v;
    for (const auto& s : summands) v.push_back(s.k);
    return Partition(v);
  }

  bool self_dual() const {
    std::map<LSummand, int> m;
    for (const auto& s : summands) ++m[s];
    for (auto [s, c] : m) {
      LSummand inv{s.z, -s.j2, s.k};
      if (m.count(inv) == 0 || m.at(inv) != c) return false;
    }
    return true;
  }

  friend bool operator==(const LParam& x, const LParam& y) { return x.summands == y.summands; }
  friend auto operator<=>(const LParam& x, const LParam& y) { return x.summands <=> y.summands; }
};

struct InfChar {
  int z = 1;
  std::vector<Part> exps;  // sorted; each encodes z·q^{e/2}

  friend bool operator==(const InfChar&, const InfChar&) = default;
};

inline LParam l_param_of_table(const ATable& m) {
  LParam phi;
  phi.gt = m.gt;
  for (const auto& e : m.entries)
    for (Part r = 0; r < e.b; ++r) phi.summands.push_back({m.z, 2 * r - (e.b - 1), e.a});
  phi.normalize();
  return phi;
}

inline InfChar inf_char(const LParam& phi) {
  InfChar chi;
  if (!phi.summands.empty()) chi.z = phi.summands.front().z;
  for (const auto& s : phi.summands)
    for (Part e = s.j2 + s.k - 1; e >= s.j2 - s.k + 1; e -= 2) chi.exps.push_back(e);
  std::sort(chi.exps.begin(), chi.exps.end());
  return chi;
}

// |P(λ)_0|, the size of the tempered L-packet attached to λ.
inline std::uint64_t lpacket_size(const ClassPartition& cp) {
  std::uint64_t all = std::uint64_t{1} << cp.S().size();
  return cp.S0().empty() ? all : all / 2;
}

struct WeakPacketRow {
  IntSet J;
  ClassPartition mu;
  ATable table;
  LParam phi;
  std::uint64_t lpacket_size = 0;
};

inline std::vector<WeakPacketRow> weak_packet(const ClassPartition& cp, int z) {
  validate_sign(z, cp.gt());
  std::vector<WeakPacketRow> rows;
  for (const auto& m : special_piece(cp)) {
    ATable t = near_tempered_table(cp, m.J, z);
    rows.push_back({m.J, m.mu, t, l_param_of_table(t), lpacket_size(m.mu)});
  }
  return rows;
}

struct PacketHit {
  IntSet J;
  ATable table;
};

inline std::vector<PacketHit> packets_containing(const ClassPartition& cp, const CharFn& e, int z) {
  validate_sign(z, cp.gt());
  if (!in_canonical_subgroup(cp, e))
    throw Error(Errc::NotCanonical, set_str(e.set) + " is not in the canonical subgroup");
  std::vector<PacketHit> out;
  for (const auto& m : special_piece(cp))
    if (is_primitive(cp, e, m.mu.lambda())) out.push_back({m.J, near_tempered_table(cp, m.J, z)});
  return out;
}

inline constexpr Part kLParamEnumBound = 16;

// All self-dual unipotent L-parameters in normal form with the given
// infinitesimal character: exhaustive cover of the eigenvalue multiset by
// ν_k strings, keeping the covers whose q^0 part lies in P^s.
inline std::vector<LParam> enumerate_lparams_with_inf_char(const InfChar& chi, const GroupType& gt,
                                                           Part bound = kLParamEnumBound) {
  if (static_cast<Part>(chi.exps.size()) > bound)
    throw Error(Errc::BoundExceeded, "infinitesimal character of size " +
                                         std::to_string(chi.exps.size()) + " exceeds " +
                                         std::to_string(bound));
  std::vector<LParam> out;
  if (chi.exps.empty()) return out;
  std::map<Part, int> pool;
  for (Part e : chi.exps) ++pool[e];
  std::vector<LSummand> cur;

  std::function<void(Part, Part)> rec = [&](Part prev_top, Part prev_k) {
    while (!pool.empty() && pool.rbegin()->second == 0) pool.erase(std::prev(pool.end()));
    if (pool.empty()) {
      LParam phi{cur, gt};
      phi.normalize();
      if (!phi.self_dual()) return;
      std::vector<Part> zero;
      for (const auto& s : phi.summands)
        if (s.j2 == 0) zero.push_back(s.k);
      if (!in_Ps(Partition(zero), gt.s)) return;
      out.push_back(std::move(phi));
      return;
    }
    const Part top = pool.rbegin()->first;
    Part maxk = 0;
    while (pool.count(top - 2 * maxk) && pool[top - 2 * maxk] > 0) ++maxk;
    if (top == prev_top) maxk = std::min(maxk, prev_k);
    auto saved = pool;
    for (Part k = maxk; k >= 1; --k) {
      for (Part i = 0; i < k; ++i) --pool[top - 2 * i];
      cur.push_back({chi.z, top - (k - 1), k});
      rec(top, k);
      cur.pop_back();
      pool = saved;
    }
  };
  rec(std::numeric_limits<Part>::max(), std::numeric_limits<Part>::max());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline InfChar quasi_basic_inf_char(const ClassPartition& cp, int z) {
  return inf_char(l_param_of_table(make_table(i_entries(cp.lambda()), cp.gt(), z)));
}

inline bool verify_almost_intro(const ClassPartition& cp, int z) {
  validate_sign(z, cp.gt());
  const Partition target = bvls_dual(cp).lambda();
  std::vector<LParam> found;
  for (auto& phi : enumerate_lparams_with_inf_char(quasi_basic_inf_char(cp, z), cp.gt()))
    if (bvls_dual(classify(phi.lambda(), cp.gt())).lambda() == target) found.push_back(phi);
  std::vector<LParam> expected;
  for (const auto& row : weak_packet(cp, z)) expected.push_back(row.phi);
  std::sort(expected.begin(), expected.end());
  return found == expected;
}

}  // namespace upkit
