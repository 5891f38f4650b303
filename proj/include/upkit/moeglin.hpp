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
#include <optional>
#include <vector>

#include "upkit/params.hpp"

namespace upkit {

// Entry ids are 1-based positions in ATable::entries; id 0 is the phantom
// entry (0,1), present only when s = -1.
inline constexpr int kPhantom = 0;

struct MoeglinParam {
  std::map<int, int> l;
  std::map<int, int> eta;  // defined exactly on R_l

  friend bool operator==(const MoeglinParam&, const MoeglinParam&) = default;
};

struct AdmissibleOrder {
  ATable table;
  std::vector<int> seq;  // ids in order, phantom first when s = -1

  bool has_phantom() const { return table.gt.s == -1; }

  TableEntry at(std::size_t pos) const {
    int id = seq.at(pos);
    return id == kPhantom ? TableEntry{0, 1} : table.entry(id);
  }

  // Position of the first real entry.
  std::size_t first_real() const { return has_phantom() ? 1 : 0; }

  bool standard() const {
    for (std::size_t i = first_real(); i + 1 < seq.size(); ++i)
      if (at(i).a > at(i + 1).a) return false;
    return true;
  }
};

// Checks the admissibility condition on the real entries of `seq`.
inline bool is_admissible(const AdmissibleOrder& ao) {
  const std::size_t f = ao.first_real();
  if (f >= ao.seq.size()) return true;
  const Part beta_first = ao.at(f).beta();
  for (std::size_t i = f; i < ao.seq.size(); ++i)
    for (std::size_t j = i + 1; j < ao.seq.size(); ++j) {
      TableEntry x = ao.at(i), y = ao.at(j);
      if (x.beta() <= y.beta()) continue;
      if (beta_first >= 0 && x.beta() > y.beta() && y.beta() >= 0 && x.alpha() <= y.alpha()) continue;
      return false;
    }
  return true;
}

inline AdmissibleOrder standard_order(const ATable& m) {
  AdmissibleOrder ao{m, {}};
  std::vector<int> ids = m.gp_ids();
  std::stable_sort(ids.begin(), ids.end(), [&](int x, int y) { return m.entry(x) < m.entry(y); });
  if (m.gt.s == -1) ao.seq.push_back(kPhantom);
  ao.seq.insert(ao.seq.end(), ids.begin(), ids.end());
  return ao;
}

inline constexpr std::size_t kMoeglinEnumBound = 12;

// All admissible orders, taken up to permutation of identical entries.
inline std::vector<AdmissibleOrder> admissible_orders(const ATable& m) {
  std::vector<int> ids = m.gp_ids();
  std::stable_sort(ids.begin(), ids.end(), [&](int x, int y) { return m.entry(x) < m.entry(y); });
  std::vector<TableEntry> pairs;
  for (int id : ids) pairs.push_back(m.entry(id));
  std::vector<AdmissibleOrder> out;
  std::vector<TableEntry> perm = pairs;
  do {
    std::map<TableEntry, std::vector<int>> pool;
    for (int id : ids) pool[m.entry(id)].push_back(id);
    AdmissibleOrder ao{m, {}};
    if (m.gt.s == -1) ao.seq.push_back(kPhantom);
    for (const auto& p : perm) {
      auto& v = pool[p];
      ao.seq.push_back(v.front());
      v.erase(v.begin());
    }
    if (is_admissible(ao)) out.push_back(std::move(ao));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// W(m), exhaustively.
inline std::vector<MoeglinParam> moeglin_params(const ATable& m) {
  std::vector<int> ids = m.gp_ids();
  if (!m.near_tempered() && ids.size() > kMoeglinEnumBound)
    throw Error(Errc::BoundExceeded, "table too large for exhaustive Moeglin enumeration");
  std::vector<MoeglinParam> out;
  MoeglinParam cur;
  if (m.gt.s == -1) {
    cur.l[kPhantom] = 0;
    cur.eta[kPhantom] = 1;
  }
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == ids.size()) {
      out.push_back(cur);
      return;
    }
    int id = ids[i];
    Part b = m.entry(id).b;
    for (Part l = 0; 2 * l <= b; ++l) {
      cur.l[id] = static_cast<int>(l);
      if (2 * l == b) {
        cur.eta.erase(id);
        rec(i + 1);
      } else {
        for (int e : {1, -1}) {
          cur.eta[id] = e;
          rec(i + 1);
        }
        cur.eta.erase(id);
      }
    }
    cur.l.erase(id);
  };
  rec(0);
  return out;
}

// γ(i) = (-1)^{|Z_i|} at order position `pos`.
inline int gamma(const AdmissibleOrder& ao, std::size_t pos) {
  const Part a = ao.at(pos).a;
  int z = 0;
  for (std::size_t j = ao.first_real(); j < ao.seq.size(); ++j) {
    if (j < pos && ao.at(j).a == a + 1) ++z;
    if (j > pos && ao.at(j).a == a - 1) ++z;
  }
  return z % 2 == 0 ? 1 : -1;
}

// ε(a_i,b_i) ∈ {0,1} for each real id, by the Arthur character formula.
inline std::map<int, int> arthur_character(const AdmissibleOrder& ao, const MoeglinParam& mp) {
  std::map<int, int> out;
  for (std::size_t pos = ao.first_real(); pos < ao.seq.size(); ++pos) {
    int id = ao.seq[pos];
    TableEntry e = ao.at(pos);
    int l = mp.l.at(id);
    int sign = gamma(ao, pos);
    if (2 * l < e.b) {
      if ((e.b / 2 + l) % 2 == 1) sign = -sign;
      if (e.b % 2 == 1) sign *= mp.eta.at(id);
    }
    out[id] = sign == 1 ? 0 : 1;
  }
  return out;
}

// The same character as a function on S(m), or nullopt when equal entries disagree.
inline std::optional<std::map<TableEntry, int>> character_on_pairs(const ATable& m,
                                                                   const std::map<int, int>& per_id) {
  std::map<TableEntry, int> out;
  for (auto [id, v] : per_id) {
    auto [it, fresh] = out.emplace(m.entry(id), v);
    if (!fresh && it->second != v) return std::nullopt;
  }
  return out;
}

inline bool in_P0(const ATable& m, const std::map<TableEntry, int>& eps) {
  int hits = 0;
  for (const auto& e : m.S_mf())
    if (eps.count(e) && eps.at(e) == 1) ++hits;
  return hits % 2 == 0;
}

struct MoveResult {
  ATable table;
  AdmissibleOrder order;
  MoeglinParam param;
  int merged_id = 0;  // id of (a_k+1, 2) in `table`
  std::map<int, int> id_map;  // old id -> new id for untouched entries
};

// Case (1) merge of the entries at order positions k, k+1.
inline MoveResult merge_move(const AdmissibleOrder& ao, const MoeglinParam& mp, std::size_t k) {
  if (k + 1 >= ao.seq.size()) throw Error(Errc::MoveNotApplicable, "no successor at position");
  TableEntry x = ao.at(k), y = ao.at(k + 1);
  int ix = ao.seq[k], iy = ao.seq[k + 1];
  if (y.a - x.a != 2 || x.b != 1 || y.b != 1)
    throw Error(Errc::MoveNotApplicable, "entries are not (a,1),(a+2,1)");
  if (mp.eta.at(iy) != -mp.eta.at(ix))
    throw Error(Errc::MoveNotApplicable, "sign condition eta(k+1) = -eta(k) fails");

  MoveResult r;
  r.table.gt = ao.table.gt;
  r.table.z = ao.table.z;
  for (std::size_t i = 0; i < ao.table.entries.size(); ++i) {
    int id = static_cast<int>(i) + 1;
    if (id == ix || id == iy) continue;
    r.table.entries.push_back(ao.table.entries[i]);
    r.id_map[id] = static_cast<int>(r.table.entries.size());
  }
  r.table.entries.push_back({x.a + 1, 2});
  r.merged_id = static_cast<int>(r.table.entries.size());
  r.order.table = r.table;
  for (std::size_t pos = 0; pos < ao.seq.size(); ++pos) {
    int id = ao.seq[pos];
    if (pos == k && ix == kPhantom) {
      r.order.seq.push_back(kPhantom);
      r.order.seq.push_back(r.merged_id);
    } else if (pos == k) r.order.seq.push_back(r.merged_id);
    else if (pos == k + 1) continue;
    else r.order.seq.push_back(id == kPhantom ? kPhantom : r.id_map.at(id));
  }
  if (ao.has_phantom()) {
    r.param.l[kPhantom] = 0;
    r.param.eta[kPhantom] = 1;
  }
  for (auto [old_id, new_id] : r.id_map) {
    if (!good_entry(ao.table.entry(old_id), ao.table.gt.s)) continue;
    r.param.l[new_id] = mp.l.at(old_id);
    if (mp.eta.count(old_id)) r.param.eta[new_id] = mp.eta.at(old_id);
  }
  r.param.l[r.merged_id] = 0;
  r.param.eta[r.merged_id] = mp.eta.at(ix);
  return r;
}

struct MoveDescriptor {
  int kind = 0;      // 1..4 for the near-tempered cases, 5 for the phantom move
  std::size_t k = 0; // order position (for phantom: position of the first real entry)
  Part c = 0;        // phantom parameter
  ATable target;
};

inline std::vector<MoveDescriptor> applicable_moves(const AdmissibleOrder& ao, const MoeglinParam& mp) {
  std::vector<MoveDescriptor> out;
  const int s = ao.table.gt.s;
  auto rest_without = [&](std::initializer_list<int> drop) {
    ATable t{{}, ao.table.gt, ao.table.z};
    for (std::size_t i = 0; i < ao.table.entries.size(); ++i)
      if (std::find(drop.begin(), drop.end(), static_cast<int>(i) + 1) == drop.end())
        t.entries.push_back(ao.table.entries[i]);
    return t;
  };
  auto lv = [&](int id) { return mp.l.at(id); };
  auto ev = [&](int id) { return mp.eta.count(id) ? mp.eta.at(id) : 0; };

  for (std::size_t k = 0; k + 1 < ao.seq.size(); ++k) {
    TableEntry x = ao.at(k), y = ao.at(k + 1);
    int ix = ao.seq[k], iy = ao.seq[k + 1];
    Part da = y.a - x.a;
    int kind = 0;
    if (da == 2 && x.b == 1 && y.b == 1 && ev(iy) == -ev(ix)) kind = 1;
    else if (da == 2 && x.b == 2 && y.b == 2 && lv(ix) + lv(iy) == 1) kind = 2;
    else if (da == 3 && lv(ix) == 0 && lv(iy) == 0 && ev(iy) == ((x.b % 2) ? -ev(ix) : ev(ix))) kind = 3;
    else if (da == 4 && x.b == 2 && y.b == 2 && lv(ix) == 0 && lv(iy) == 0 && ev(iy) == ev(ix)) kind = 4;
    if (!kind) continue;
    MoveDescriptor d{kind, k, 0, rest_without({ix, iy})};
    if (kind == 1) {
      d.target.entries.push_back({x.a + 1, 2});
    } else {
      Part sa = x.a + y.a, db = y.b - x.b, sb = x.b + y.b;
      Part a1 = (sa + db) / 2, b1 = (sb + da) / 2, a2 = (sa - db) / 2, b2 = (sb - da) / 2;
      if (a1 > 0 && b1 > 0) d.target.entries.push_back({a1, b1});
      if (a2 > 0 && b2 > 0) d.target.entries.push_back({a2, b2});
    }
    out.push_back(std::move(d));
  }

  const std::size_t f = ao.first_real();
  if (f < ao.seq.size()) {
    TableEntry x = ao.at(f);
    int ix = ao.seq[f];
    Part d = std::min(x.a, x.b);
    Part beta = x.beta();
    bool ok = false;
    if (beta == 0) ok = lv(ix) == 0;
    else if (beta == 1) ok = lv(ix) == 0 && ev(ix) == -1;
    else if (beta == -1) ok = lv(ix) == 1 && ev(ix) == -1;
    if (ok && d > 1) {
      for (Part c = 1; c < d; ++c) {
        MoveDescriptor md{5, f, c, rest_without({ix})};
        std::vector<TableEntry> add;
        if (beta == 0) add = {{c, c}, {d - c, d + c}};
        else if (beta == 1) add = {{c + 1, c}, {d - c - 1, d + c}};
        else add = {{c, c + 1}, {d - c - 1, d + c}};
        for (auto e : add)
          if (e.a > 0 && e.b > 0) md.target.entries.push_back(e);
        out.push_back(std::move(md));
      }
    }
  }
  (void)s;
  return out;
}

// {ε ∈ P(λ)_0 : t_c(ε) ≠ 1 for all c ∈ J}.
inline std::vector<CharFn> tempered_intersection(const ClassPartition& cp, int z, const IntSet& J) {
  validate_sign(z, cp.gt());
  const IntSet jl = piece_data(cp).J;
  if (!set_subset(J, jl))
    throw Error(Errc::NotInJ, set_str(J) + " is not contained in J(lambda) = " + set_str(jl));
  std::vector<CharFn> out;
  for (const CharFn& e : char_group(cp)) {
    bool ok = true;
    for (Part c : J) ok = ok && t_value(c, e) != 1;
    if (ok) out.push_back(e);
  }
  return out;
}

// Tempered Moeglin parameter of ε on the standard order of i(λ): l ≡ 0, η = (-1)^ε.
inline MoeglinParam tempered_param(const AdmissibleOrder& ao, const CharFn& e) {
  MoeglinParam mp;
  for (int id : ao.seq) {
    mp.l[id] = 0;
    if (id == kPhantom) mp.eta[id] = 1;
    else mp.eta[id] = e.has(ao.table.entry(id).a) ? -1 : 1;
  }
  return mp;
}

}  // namespace upkit
