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
#include <atomic>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "upkit/moeglin.hpp"
#include "upkit/params.hpp"
#include "upkit/pieces.hpp"
#include "upkit/springer.hpp"
#include "upkit/wreps.hpp"
#include "upkit/wreps_oracle.hpp"

namespace upkit {

struct SuiteReport {
  std::string name;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::vector<std::string> samples;  // first few failure descriptions
  std::map<std::string, std::size_t> counts;
  double seconds = 0;

  bool pass() const { return failures == 0 && checked > 0; }
};

inline constexpr std::size_t kMaxSamples = 8;

// Per-item outcome, merged in item order so reports do not depend on `jobs`.
struct ItemOutcome {
  std::size_t checked = 0;
  std::vector<std::string> failures;
  std::map<std::string, std::size_t> counts;

  void check(bool ok, const std::string& what) {
    ++checked;
    if (!ok) failures.push_back(what);
  }
};

template <class Item>
void run_items(SuiteReport& rep, const std::vector<Item>& items, unsigned jobs,
               const std::function<void(const Item&, ItemOutcome&)>& fn) {
  std::vector<ItemOutcome> out(items.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < items.size();) {
      try {
        fn(items[i], out[i]);
      } catch (const std::exception& e) {
        out[i].check(false, std::string("exception: ") + e.what());
      }
    }
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(items.size(), 1))));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& o : out) {
    rep.checked += o.checked;
    rep.failures += o.failures.size();
    for (auto& f : o.failures)
      if (rep.samples.size() < kMaxSamples) rep.samples.push_back(f);
    for (auto& [k, v] : o.counts) rep.counts[k] += v;
  }
}

template <class Body>
SuiteReport timed_suite(const std::string& name, Body body) {
  SuiteReport rep;
  rep.name = name;
  auto t0 = std::chrono::steady_clock::now();
  body(rep);
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

// All classes of both types with N ≤ maxN, optionally only good-parity ones.
inline std::vector<ClassPartition> classes_up_to(Part maxN, bool good_parity_only = false) {
  std::vector<ClassPartition> out;
  for (int s : {1, -1})
    for (Part N = s == 1 ? 1 : 2; N <= maxN; N += 2)
      for (auto& cp : enumerate_classes(GroupType::make(s, N), std::max(maxN, kDefaultMaxN)))
        if (!good_parity_only || in_Ps0(cp.lambda(), s)) out.push_back(cp);
  return out;
}

inline std::string tag(const ClassPartition& cp) {
  return std::string(1, cp.gt().dual_letter()) + "(" + cp.lambda().str() + ")";
}

inline std::vector<int> signs_for(const GroupType& gt) {
  return gt.s == 1 ? std::vector<int>{1} : std::vector<int>{1, -1};
}

// The ε ∈ P(λ)_0 detected by the Springer side: Springer type and weakly spherical.
inline std::vector<CharFn> spherical_characters(const ClassPartition& cp) {
  std::vector<CharFn> out;
  ClassPartition gp = classify(cp.gp(), GroupType::make(cp.s(), cp.gp().total()));
  for (const CharFn& e : char_group(cp)) {
    auto sd = springer_index_data(gp, e);
    if (is_springer_type(sd) && weakly_spherical(sd)) out.push_back(e);
  }
  return out;
}

// Sp_8 fixture: dual type B, λ = (5,3,1).
inline SuiteReport suite_sp8() {
  return timed_suite("sp8", [](SuiteReport& rep) {
    ItemOutcome o;
    auto cp = classify(Partition{5, 3, 1}, GroupType::make(1, 9));
    o.check(char_group(cp).size() == 4, "|A_0| != 4");
    auto dag = canonical_subgroup(cp);
    o.check(dag == std::vector<CharFn>{CharFn{}, CharFn{{1, 3}}}, "A-dagger != {(), {1,3}}");
    std::vector<Partition> spc;
    for (auto& m : special_piece(cp)) spc.push_back(m.mu.lambda());
    std::sort(spc.begin(), spc.end());
    o.check(spc == std::vector<Partition>{Partition{4, 4, 1}, Partition{5, 3, 1}}, "Spc != {(5,3,1),(4,4,1)}");
    std::vector<std::uint64_t> sizes;
    std::uint64_t total = 0;
    for (auto& r : weak_packet(cp, 1)) {
      sizes.push_back(r.lpacket_size);
      total += r.lpacket_size;
    }
    std::sort(sizes.rbegin(), sizes.rend());
    o.check(sizes == std::vector<std::uint64_t>{4, 1} && total == 5, "weak packet sizes != (4,1)");
    auto hits = packets_containing(cp, parse_charfn(cp, "--+"), 1);
    std::vector<IntSet> js;
    for (auto& h : hits) js.push_back(h.J);
    o.check(js == std::vector<IntSet>{{}, {4}}, "membership of (--+) != {J=(), J={4}}");
    std::vector<std::string> sph;
    for (auto& e : spherical_characters(cp)) sph.push_back(sign_string(cp, e));
    std::sort(sph.begin(), sph.end());
    o.check(sph == std::vector<std::string>{"+++", "--+"}, "weakly spherical set != {(+++),(--+)}");
    run_items<int>(rep, {0}, 1, [&](const int&, ItemOutcome& out) { out = o; });
  });
}

// Triangular family λ = (4k+1, 4k-1, ..., 1), dual type B.
inline SuiteReport suite_triangular(Part kmax) {
  return timed_suite("triangular", [kmax](SuiteReport& rep) {
    std::vector<Part> ks;
    for (Part k = 1; k <= kmax; ++k) ks.push_back(k);
    run_items<Part>(rep, ks, 1, [](const Part& k, ItemOutcome& o) {
      std::vector<Part> parts;
      for (Part p = 4 * k + 1; p >= 1; p -= 2) parts.push_back(p);
      Partition lam(parts);
      auto cp = classify(lam, GroupType::make(1, lam.total()));
      const std::uint64_t two = std::uint64_t{1} << k, four = two * two;
      std::uint64_t five = 1, total = 0;
      for (Part i = 0; i < k; ++i) five *= 5;
      for (auto& r : weak_packet(cp, 1)) total += r.lpacket_size;
      const std::string t = "k=" + std::to_string(k) + ": ";
      o.check(char_group(cp).size() == four, t + "|A_0| != 4^k");
      o.check(canonical_subgroup(cp).size() == two, t + "|A-dagger| != 2^k");
      o.check(special_piece(cp).size() == two, t + "|Spc| != 2^k");
      o.check(total == five, t + "weak packet total != 5^k");
    });
  });
}

// d(λ) special; d-fibres are special pieces; d'∘d = T^{I(λ)}.
inline SuiteReport suite_duality(Part maxN, unsigned jobs) {
  return timed_suite("duality", [=](SuiteReport& rep) {
    auto items = classes_up_to(maxN);
    std::map<std::pair<int, Partition>, std::vector<Partition>> fibres;
    std::vector<Partition> duals(items.size());
    std::vector<std::size_t> idx(items.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    run_items<std::size_t>(rep, idx, jobs, [&](const std::size_t& i, ItemOutcome& o) {
      const auto& cp = items[i];
      auto d = bvls_dual(cp);
      duals[i] = d.lambda();
      o.check(is_special(d), tag(cp) + ": d(lambda) not special");
      auto back = bvls_dual(d);
      o.check(back.lambda() == T_up(cp, piece_data(cp).I).lambda(), tag(cp) + ": d'd != T^I");
    });
    for (std::size_t i = 0; i < items.size(); ++i)
      fibres[{items[i].s(), duals[i]}].push_back(items[i].lambda());
    std::vector<std::size_t> specials;
    for (std::size_t i = 0; i < items.size(); ++i)
      if (is_special(items[i])) specials.push_back(i);
    run_items<std::size_t>(rep, specials, jobs, [&](const std::size_t& i, ItemOutcome& o) {
      const auto& cp = items[i];
      std::vector<Partition> piece;
      for (auto& m : special_piece(cp)) piece.push_back(m.mu.lambda());
      auto fib = fibres.at({cp.s(), bvls_dual(cp).lambda()});
      std::sort(piece.begin(), piece.end());
      std::sort(fib.begin(), fib.end());
      o.check(piece == fib, tag(cp) + ": d-fibre != special piece");
      ++o.counts["special"];
    });
    rep.counts["classes"] = items.size();
  });
}

// |Spc(λ)| = 2^{|J(λ)|}.
inline SuiteReport suite_spc(Part maxN, unsigned jobs) {
  return timed_suite("spc", [=](SuiteReport& rep) {
    auto items = classes_up_to(maxN);
    run_items<ClassPartition>(rep, items, jobs, [](const ClassPartition& cp, ItemOutcome& o) {
      auto pd = piece_data(cp);
      o.check(special_piece(cp).size() == (std::size_t{1} << pd.J.size()), tag(cp) + ": |Spc| != 2^|J|");
    });
  });
}

// Brute-force L-parameter enumeration reproduces {φ_{z,λ,μ}}.
inline SuiteReport suite_almost_intro(Part maxN, unsigned jobs) {
  return timed_suite("almostintro", [=](SuiteReport& rep) {
    auto items = classes_up_to(maxN);
    run_items<ClassPartition>(rep, items, jobs, [](const ClassPartition& cp, ItemOutcome& o) {
      for (int z : signs_for(cp.gt()))
        o.check(verify_almost_intro(cp, z), tag(cp) + " z=" + std::to_string(z) + ": L-parameter sets differ");
    });
  });
}

// Pieri/LR induction against the character-theoretic oracle.
inline SuiteReport suite_wreps(Part maxn) {
  return timed_suite("wreps", [=](SuiteReport& rep) {
    std::vector<std::pair<Bipartition, Bipartition>> pairs;
    for (Part n = 0; n <= std::min(maxn, oracle::kMaxRank); ++n)
      for (Part i = 0; i <= n; ++i)
        for (auto& x : all_bipartitions(i))
          for (auto& y : all_bipartitions(n - i)) pairs.push_back({x, y});
    run_items<std::pair<Bipartition, Bipartition>>(rep, pairs, 1, [](const auto& p, ItemOutcome& o) {
      o.check(induce(p.first, p.second) == oracle::oracle_mult(p.first, p.second),
              "Ind " + p.first.str() + " x " + p.second.str() + " differs from oracle");
    });
  });
}

// dim π^{W_{n,i}} from E¹-multiplicities against brute-force fixed vectors.
inline SuiteReport suite_firstreduction(Part maxn) {
  return timed_suite("firstreduction", [=](SuiteReport& rep) {
    std::vector<Bipartition> reps;
    for (Part n = 0; n <= std::min(maxn, oracle::kMaxRank); ++n)
      for (auto& x : all_bipartitions(n)) reps.push_back(x);
    run_items<Bipartition>(rep, reps, 1, [](const Bipartition& x, ItemOutcome& o) {
      for (Part i = 0; i <= x.n(); ++i)
        o.check(invariant_dim(WRep{{x, 1}}, x.n(), i) == oracle::fixed_dim_brute_force(x, i),
                x.str() + " i=" + std::to_string(i) + ": fixed dimension differs");
    });
  });
}

// ε ∈ A† ⇔ (Springer type ∧ weakly spherical), plus the zero-part and
// early-exit consistency checks.
inline SuiteReport suite_dagger(Part maxN, unsigned jobs) {
  return timed_suite("dagger", [=](SuiteReport& rep) {
    auto items = classes_up_to(maxN, true);
    run_items<ClassPartition>(rep, items, jobs, [](const ClassPartition& cp, ItemOutcome& o) {
      for (const CharFn& e : char_group(cp)) {
        auto sd = springer_index_data(cp, e);
        const bool dag = in_canonical_subgroup(cp, e);
        const bool sp = is_springer_type(sd);
        const std::string t = tag(cp) + " eps=" + sign_string(cp, e);
        if (!sp) {
          ++o.counts["not_springer_type"];
          o.check(!dag, t + ": canonical character is not of Springer type");
          continue;
        }
        springer_bipartition(sd);
        const bool ws = weakly_spherical(sd);
        ++o.counts[dag ? "dagger" : "non_dagger"];
        o.check(dag == ws, t + ": A-dagger=" + std::to_string(dag) + " spherical=" + std::to_string(ws));
        auto g = springer_gammas(sd);
        IntSet xs(sd.Xs.begin(), sd.Xs.end());
        for (std::size_t i : sd.X) {
          if (g[i] != 0) continue;
          bool early = true;
          for (std::size_t a : sd.Xeps)
            if (a < i && !set_contains(xs, static_cast<Part>(a))) early = false;
          if (early) o.check(dag, t + ": early-exit criterion contradicts A-dagger");
        }
      }
    });
  });
}

// Row 1 of every tableau is the complement of X_{λ,ε}; p_set members are
// pairwise incomparable.
inline SuiteReport suite_firstrow(Part maxN, unsigned jobs) {
  return timed_suite("firstrow", [=](SuiteReport& rep) {
    auto items = classes_up_to(maxN, true);
    run_items<ClassPartition>(rep, items, jobs, [](const ClassPartition& cp, ItemOutcome& o) {
      auto [D, tau] = delta_tau(cp.gt());
      for (const CharFn& e : char_group(cp)) {
        auto sd = springer_index_data(cp, e);
        if (!is_springer_type(sd)) continue;
        const std::string t = tag(cp) + " eps=" + sign_string(cp, e);
        auto run = green_tableaux_run(sd, D, tau);
        o.check(run.dead_ends == 0, t + ": row start with no admissible sign");
        std::set<Bipartition> ps;
        for (const auto& tab : run.tableaux) {
          std::vector<bool> in(sd.ell + 1, false);
          for (std::size_t i : tab.rows.front()) in[i] = true;
          std::vector<std::size_t> rest;
          for (std::size_t i = 1; i <= sd.ell; ++i)
            if (!in[i]) rest.push_back(i);
          o.check(rest == sd.Xeps, t + ": first row is not the complement of X_{lambda,eps}");
          ps.insert(tableau_bipartition(sd, tab));
        }
        o.counts["tableaux"] += run.tableaux.size();
        o.counts["p_set"] += ps.size();
        for (const auto& x : ps)
          for (const auto& y : ps)
            if (x != y)
              o.check(!leq_dominance(x, y, D, tau), t + ": " + x.str() + " <= " + y.str());
      }
    });
  });
}

// Tempered parameters merged along J reproduce m_{λ,J}, keep the character
// on untouched entries and satisfy the sign identities at merged entries.
inline void moeglin_round_trip(const ClassPartition& cp, int z, const IntSet& J, ItemOutcome& o) {
  const std::string t = tag(cp) + " z=" + std::to_string(z) + " J=" + set_str(J);
  const ATable base = near_tempered_table(cp, {}, z);
  const ATable target = near_tempered_table(cp, J, z);
  for (const CharFn& e : tempered_intersection(cp, z, J)) {
    const std::string te = t + " eps=" + set_str(e.set);
    AdmissibleOrder ao = standard_order(base);
    MoeglinParam mp = tempered_param(ao, e);
    const auto eps0 = arthur_character(ao, mp);
    bool tempered_ok = true;
    for (auto [id, v] : eps0) tempered_ok = tempered_ok && v == e.value(base.entry(id).a);
    o.check(tempered_ok, te + ": tempered character differs from eps");

    std::map<int, int> live;  // original id -> current id
    for (int id : base.gp_ids()) live[id] = id;
    struct Merge { Part c; int id; int eta; };
    std::vector<Merge> merges;
    bool ok = true;
    for (Part c : J) {
      std::size_t lo = ao.seq.size(), hi = ao.seq.size();
      for (std::size_t pos = 0; pos < ao.seq.size(); ++pos) {
        TableEntry x = ao.at(pos);
        if (x == TableEntry{c - 1, 1}) lo = pos;
        if (x == TableEntry{c + 1, 1} && hi == ao.seq.size()) hi = pos;
      }
      if (lo == ao.seq.size() || hi != lo + 1) {
        o.check(false, te + ": merge pair for c=" + std::to_string(c) + " not adjacent");
        ok = false;
        break;
      }
      const int gone_lo = ao.seq[lo], gone_hi = ao.seq[hi];
      const int eta = mp.eta.at(gone_lo);
      auto r = merge_move(ao, mp, lo);
      std::map<int, int> next;
      for (auto [orig, cur] : live)
        if (cur != gone_lo && cur != gone_hi) next[orig] = r.id_map.at(cur);
      live = next;
      for (auto& m : merges) m.id = r.id_map.at(m.id);
      merges.push_back({c, r.merged_id, eta});
      ao = r.order;
      mp = r.param;
    }
    if (!ok) continue;
    o.check(ao.table.canonical() == target.canonical(), te + ": merged table != m_{lambda,J}");
    o.check(is_admissible(ao) && ao.standard(), te + ": merged order not standard admissible");
    const auto eps1 = arthur_character(ao, mp);
    for (auto [orig, cur] : live)
      o.check(eps1.at(cur) == eps0.at(orig), te + ": character moved on an untouched entry");
    for (const auto& m : merges) {
      o.check(mp.l.at(m.id) == 0, te + ": l != 0 at merged entry");
      o.check(eps1.at(m.id) == 1, te + ": eps(c,2) != 1 at c=" + std::to_string(m.c));
      const int below = m.c - 1 == 0 ? 0 : e.value(m.c - 1);
      const int above = e.value(m.c + 1);
      o.check(m.eta == (below ? -1 : 1), te + ": eta != (-1)^eps(c-1)");
      o.check(m.eta == (above ? 1 : -1), te + ": eta != (-1)^(eps(c+1)+1)");
    }
    ++o.counts["round_trips"];
  }
}

inline SuiteReport suite_moeglin(Part maxN, unsigned jobs) {
  return timed_suite("moeglin", [=](SuiteReport& rep) {
    auto items = classes_up_to(maxN);
    run_items<ClassPartition>(rep, items, jobs, [](const ClassPartition& cp, ItemOutcome& o) {
      const IntSet jl = piece_data(cp).J;
      for (int z : signs_for(cp.gt()))
        for (const CharFn& J : subsets_of(jl, [](const CharFn&) { return true; }))
          moeglin_round_trip(cp, z, J.set, o);
    });
  });
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"fixtures", "duality",    "spc",      "almostintro", "wreps",
                                              "firstreduction", "dagger", "firstrow", "moeglin"};
  return names;
}

// Runs a named suite; "fixtures" covers the Sp_8 and triangular checks.
inline std::vector<SuiteReport> run_suite(const std::string& name, Part maxN, unsigned jobs) {
  if (name == "all") {
    std::vector<SuiteReport> out;
    for (const auto& n : suite_names())
      for (auto& r : run_suite(n, maxN, jobs)) out.push_back(std::move(r));
    return out;
  }
  if (name == "fixtures") return {suite_sp8(), suite_triangular(maxN >= 49 ? 3 : maxN >= 25 ? 2 : 1)};
  if (name == "duality") return {suite_duality(maxN, jobs)};
  if (name == "spc") return {suite_spc(maxN, jobs)};
  if (name == "almostintro") return {suite_almost_intro(std::min(maxN, Part{14}), jobs)};
  if (name == "wreps") return {suite_wreps(std::min<Part>(maxN, 5))};
  if (name == "firstreduction") return {suite_firstreduction(std::min<Part>(maxN, 5))};
  if (name == "dagger") return {suite_dagger(maxN, jobs)};
  if (name == "firstrow") return {suite_firstrow(maxN, jobs)};
  if (name == "moeglin") return {suite_moeglin(maxN, jobs)};
  throw Error(Errc::ParseError, "unknown suite '" + name + "'");
}

}  // namespace upkit
