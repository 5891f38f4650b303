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

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "upkit/components.hpp"
#include "upkit/partition.hpp"
#include "upkit/wreps.hpp"

namespace upkit {

// Index data of (λ, ε) for a good-parity λ, with 1-based indices into the
// decreasing parts. Vectors indexed by i carry an unused slot 0.
struct SpringerIndexData {
  ClassPartition base;
  CharFn eps;
  std::size_t ell = 0;
  std::vector<int> epsbar;
  std::vector<std::size_t> e_plus, e_minus;
  std::vector<std::size_t> X;       // X_λ
  std::vector<std::size_t> Xs;      // X^s_λ
  std::vector<std::size_t> Xeps;    // X_{λ,ε}
  IntSet S_max, S_min;

  Part lam(std::size_t i) const { return base.lambda().at(i); }
  int s() const { return base.s(); }
};

inline SpringerIndexData springer_index_data(const ClassPartition& cp, const CharFn& eps) {
  if (!in_Ps0(cp.lambda(), cp.s()))
    throw Error(Errc::BadParity, "(" + cp.lambda().str() + ") is not of good parity");
  if (!set_subset(eps.set, cp.S()))
    throw Error(Errc::ParseError, set_str(eps.set) + " is not a subset of S(lambda)");
  SpringerIndexData sd;
  sd.base = cp;
  sd.eps = eps;
  sd.ell = cp.lambda().length();
  sd.epsbar.assign(sd.ell + 1, 0);
  for (std::size_t i = 1; i <= sd.ell; ++i) {
    int v = eps.value(sd.lam(i)) + static_cast<int>(i) - 1;
    sd.epsbar[i] = v % 2 == 0 ? 1 : -1;
    (sd.epsbar[i] == 1 ? sd.e_plus : sd.e_minus).push_back(i);
  }
  for (std::size_t i = 1; i <= sd.ell; ++i) {
    if (i > 1 && sd.lam(i) == sd.lam(i - 1)) continue;
    sd.X.push_back(i);
    if ((i % 2 == 0) == (cp.s() == 1)) sd.Xs.push_back(i);
    int prev = i == 1 ? 0 : eps.value(sd.lam(i - 1));
    if (eps.value(sd.lam(i)) != prev) sd.Xeps.push_back(i);
  }
  BlockStructure bs = block_structure(cp);
  for (const Block& b : bs.blocks) {
    sd.S_max.push_back(b.max);
    sd.S_min.push_back(b.min);
  }
  const Part top = sd.lam(1), bottom = sd.lam(sd.ell);
  if (cp.s() == 1 && set_contains(cp.S0(), top)) std::erase(sd.S_max, top);
  if (cp.s() == -1 && set_contains(cp.S0(), bottom) && set_contains(sd.S_max, bottom))
    std::erase(sd.S_min, bottom);
  sd.S_max = make_set(sd.S_max);
  sd.S_min = make_set(sd.S_min);
  return sd;
}

// D_ε(i), with λ_0 read as +∞.
inline Part defect(const SpringerIndexData& sd, std::size_t i) {
  const Part bound = i == 0 ? kInfinity : sd.lam(i);
  Part d = 0;
  for (Part a : sd.S_max)
    if (a < bound) d += sd.eps.value(a);
  for (Part a : sd.S_min)
    if (a < bound) d -= sd.eps.value(a);
  return d;
}

inline bool is_springer_type(const SpringerIndexData& sd) { return defect(sd, 0) == 0; }

// γ^{λ,ε}_i, i = 1..ℓ (slot 0 unused).
inline std::vector<Part> springer_gammas(const SpringerIndexData& sd) {
  const int s = sd.s();
  const Part mG = s == 1 ? -2 : 1, mG2 = s == 1 ? 0 : -1;
  std::vector<Part> g(sd.ell + 1, 0);
  for (std::size_t i = 1; i <= sd.ell; ++i) {
    Part li = sd.lam(i);
    Part tilde = i % 2 == 0 ? (li + 1) / 2 : li / 2;
    Part m = set_contains(sd.S_min, li) ? mG2 : mG;
    Part sign_i = i % 2 == 0 ? 1 : -1;
    g[i] = tilde - 2 * s * sd.epsbar[i] * defect(sd, i) + sign_i * sd.eps.value(li) * m;
  }
  return g;
}

// Cases of the zero-part lemma that fail at some index; empty when consistent.
inline std::vector<std::size_t> zero_part_violations(const SpringerIndexData& sd) {
  std::vector<std::size_t> bad;
  auto g = springer_gammas(sd);
  auto e = [&](Part a) { return sd.eps.value(a); };
  auto in0 = [&](Part a) { return set_contains(sd.base.S0(), a); };
  auto inmin = [&](Part a) { return set_contains(sd.S_min, a); };
  for (std::size_t i = 1; i <= sd.ell; ++i) {
    Part d = defect(sd, i);
    if (g[i] != 0 || d < -1 || d > 1) continue;
    Part li = sd.lam(i);
    bool odd = i % 2 == 1, ok = true;
    switch (li) {
      case 1: break;
      case 2: ok = inmin(2) || odd; break;
      case 3: ok = !odd; break;
      case 4: ok = (d == 1 && e(4) == 0) || (!inmin(4) && odd); break;
      case 5: ok = (d == 1 && e(5) == 0) || (in0(1) && in0(3) && e(1) == 1 && e(3) == 0 && e(5) == 1); break;
      case 6: ok = (d == 1 && odd) || (in0(2) && in0(4) && inmin(6) && e(2) == 1 && e(4) == 0 && e(6) == 1); break;
      case 7: ok = d == 1 && !inmin(7); break;
      default: ok = false;
    }
    if (!ok) bad.push_back(i);
  }
  return bad;
}

inline Bipartition springer_bipartition(const SpringerIndexData& sd) {
  if (!is_springer_type(sd))
    throw Error(Errc::NotSpringerType, sign_string(sd.base, sd.eps) + " on (" + sd.base.lambda().str() +
                                           ") is not of Springer type");
  auto g = springer_gammas(sd);
  auto take = [&](const std::vector<std::size_t>& idx) {
    std::vector<Part> v;
    Part prev = kInfinity;
    for (std::size_t i : idx) {
      if (g[i] < 0 || g[i] > prev)
        throw Error(Errc::MalformedOutput, "gamma sequence not weakly decreasing and non-negative");
      prev = g[i];
      if (g[i] > 0) v.push_back(g[i]);
    }
    return Partition(v);
  };
  Bipartition out{take(sd.e_plus), take(sd.e_minus)};
  if (out.n() != sd.base.gt().rank())
    throw Error(Errc::MalformedOutput, "bipartition " + out.str() + " does not have rank size");
  if (!zero_part_violations(sd).empty())
    throw Error(Errc::MalformedOutput, "zero-part self-check failed");
  return out;
}

struct GreenTableau {
  std::vector<std::vector<std::size_t>> rows;
  Part Delta = 0, tau = 0;
};

struct TableauRun {
  std::vector<GreenTableau> tableaux;
  std::size_t dead_ends = 0;  // row starts where no sign qualified
};

inline constexpr std::size_t kMaxTableaux = 2000000;

inline TableauRun green_tableaux_run(const SpringerIndexData& sd, Part Delta, Part tau) {
  if (!is_springer_type(sd))
    throw Error(Errc::NotSpringerType, "tableaux need a Springer-type character");
  auto g = springer_gammas(sd);
  TableauRun run;
  std::vector<bool> used(sd.ell + 1, false);
  GreenTableau cur{{}, Delta, tau};
  std::size_t filled = 0;

  auto first_unused = [&](const std::vector<std::size_t>& list, std::size_t after) -> std::size_t {
    for (std::size_t i : list)
      if (i > after && !used[i]) return i;
    return 0;
  };

  std::function<void(Part)> start_row = [&](Part sigma) {
    if (filled == sd.ell) {
      if (run.tableaux.size() >= kMaxTableaux)
        throw Error(Errc::BoundExceeded, "tableau enumeration exceeded limit");
      run.tableaux.push_back(cur);
      return;
    }
    std::size_t kp = first_unused(sd.e_plus, 0), km = first_unused(sd.e_minus, 0);
    bool any = false;
    for (int u : {1, -1}) {
      std::size_t k = u == 1 ? kp : km, other = u == 1 ? km : kp;
      if (!k) continue;
      bool ok = other == 0 || g[k] >= -u * (Delta - tau * sigma);
      if (!ok) continue;
      any = true;
      // Fill the row greedily from k.
      std::vector<std::size_t> row{k};
      used[k] = true;
      for (;;) {
        std::size_t prev = row.back();
        const auto& list = sd.epsbar[prev] == 1 ? sd.e_minus : sd.e_plus;
        std::size_t nx = first_unused(list, prev);
        if (!nx) break;
        used[nx] = true;
        row.push_back(nx);
      }
      filled += row.size();
      cur.rows.push_back(row);
      start_row(sigma + sd.epsbar[k]);
      cur.rows.pop_back();
      filled -= row.size();
      for (std::size_t i : row) used[i] = false;
    }
    if (!any) ++run.dead_ends;
  };
  start_row(0);
  return run;
}

inline std::vector<GreenTableau> green_tableaux(const SpringerIndexData& sd, Part Delta, Part tau) {
  return green_tableaux_run(sd, Delta, tau).tableaux;
}

inline Bipartition tableau_bipartition(const SpringerIndexData& sd, const GreenTableau& t) {
  auto g = springer_gammas(sd);
  std::vector<Part> a, b;
  for (const auto& row : t.rows) {
    Part sum = 0;
    for (std::size_t i : row) sum += g[i];
    if (sum == 0) continue;
    (sd.epsbar[row.front()] == 1 ? a : b).push_back(sum);
  }
  return {Partition(a), Partition(b)};
}

inline std::set<Bipartition> p_set(const SpringerIndexData& sd, Part Delta, Part tau) {
  std::set<Bipartition> out;
  for (const auto& t : green_tableaux(sd, Delta, tau)) out.insert(tableau_bipartition(sd, t));
  return out;
}

// First `cutoff` entries of Λ_{Δ,τ}(α,β) = R_{Δ,τ}(α) ∪ R_{0,τ}(β).
inline std::vector<Part> lambda_seq(const Bipartition& x, Part Delta, Part tau, std::size_t cutoff) {
  std::vector<Part> v;
  for (std::size_t i = 1; i <= cutoff; ++i) {
    Part shift = tau * static_cast<Part>(i - 1);
    v.push_back(Delta + x.alpha.at(i) - shift);
    v.push_back(x.beta.at(i) - shift);
  }
  std::sort(v.begin(), v.end(), std::greater<>());
  v.resize(cutoff);
  return v;
}

// Prefix length beyond which Λ-prefix sums of two bipartitions of the same
// rank agree.
inline std::size_t safe_cutoff(const Bipartition& x, const Bipartition& y, Part Delta, Part tau) {
  std::size_t len = std::max({x.alpha.length(), x.beta.length(), y.alpha.length(), y.beta.length()});
  Part n = std::max(x.n(), y.n());
  Part q = tau > 0 ? (Delta + tau - 1) / tau : Delta;
  return 2 * (len + static_cast<std::size_t>(q) + static_cast<std::size_t>(n) + 2);
}

inline bool leq_dominance(const Bipartition& x, const Bipartition& y, Part Delta, Part tau) {
  std::size_t c = safe_cutoff(x, y, Delta, tau);
  auto a = lambda_seq(x, Delta, tau, c), b = lambda_seq(y, Delta, tau, c);
  Part sa = 0, sb = 0;
  for (std::size_t i = 0; i < c; ++i) {
    sa += a[i];
    sb += b[i];
    if (sa > sb) return false;
  }
  return true;
}

// (Δ_G, τ_G).
inline std::pair<Part, Part> delta_tau(const GroupType& gt) {
  Part n = gt.rank();
  return gt.s == 1 ? std::pair<Part, Part>{n + 1, 1} : std::pair<Part, Part>{n + 1, 2 * n + 1};
}

inline bool weakly_spherical(const SpringerIndexData& sd) {
  auto [D, t] = delta_tau(sd.base.gt());
  for (const auto& b : p_set(sd, D, t))
    if (is_E(b, sd.s())) return true;
  return false;
}

// Reduces to the good-parity part λ^{gp}, which carries the same S(λ).
inline bool weakly_spherical_general(const ClassPartition& cp, const CharFn& eps) {
  const Partition& gp = cp.gp();
  ClassPartition red = classify(gp, GroupType::make(cp.s(), gp.total()));
  return weakly_spherical(springer_index_data(red, eps));
}

}  // namespace upkit
