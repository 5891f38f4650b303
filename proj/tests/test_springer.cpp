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
#include <doctest.h>

#include "upkit/springer.hpp"

using namespace upkit;

namespace {

SpringerIndexData sdata(std::initializer_list<Part> parts, int s, IntSet eps) {
  Partition p(parts);
  return springer_index_data(classify(p, GroupType::make(s, p.total())), CharFn(std::move(eps)));
}

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return Errc::ParseError;
}

std::vector<ClassPartition> good_classes(Part maxN) {
  std::vector<ClassPartition> out;
  for (int s : {1, -1})
    for (Part N = s == 1 ? 1 : 2; N <= maxN; N += 2)
      for (auto& cp : enumerate_classes(GroupType::make(s, N)))
        if (in_Ps0(cp.lambda(), s)) out.push_back(cp);
  return out;
}

}  // namespace

TEST_CASE("index data") {
  auto sd = sdata({5, 3, 1}, 1, {1, 3});
  CHECK(sd.ell == 3);
  CHECK(sd.S_max == IntSet{3});
  CHECK(sd.S_min == IntSet{1, 5});
  // ε(λ_i) = (0,1,1), so epsbar = (+,+,-).
  CHECK(sd.epsbar == std::vector<int>{0, 1, 1, -1});
  CHECK(sd.e_plus == std::vector<std::size_t>{1, 2});
  CHECK(sd.e_minus == std::vector<std::size_t>{3});
  CHECK(sd.Xeps == std::vector<std::size_t>{2});
  for (auto& cp : good_classes(14))
    for (auto& e : char_group(cp)) {
      auto d = springer_index_data(cp, e);
      CHECK(d.e_plus.size() + d.e_minus.size() == d.ell);
      std::vector<std::size_t> xe;
      for (std::size_t i : d.X)
        if (e.value(d.lam(i)) != (i == 1 ? 0 : e.value(d.lam(i - 1)))) xe.push_back(i);
      CHECK(xe == d.Xeps);
    }
}

TEST_CASE("defects") {
  auto a = sdata({5}, 1, {});
  CHECK(a.S_max.empty());
  CHECK(a.S_min == IntSet{5});
  CHECK(defect(a, 0) == 0);
  CHECK(defect(a, 1) == 0);
  auto b = sdata({2}, -1, {2});
  CHECK(defect(b, 0) == 1);
  CHECK_FALSE(is_springer_type(b));
  auto c = sdata({5, 3, 1}, 1, {1, 3});
  CHECK(defect(c, 0) == 0);
  CHECK(is_springer_type(c));
  CHECK(defect(sdata({5, 3, 1}, 1, {1, 5}), 0) == -2);
  for (auto& cp : good_classes(12)) CHECK(is_springer_type(springer_index_data(cp, CharFn())));
}

TEST_CASE("Springer bipartitions") {
  for (Part n = 0; n <= 6; ++n) {
    CHECK(springer_bipartition(sdata({2 * n + 1}, 1, {})) == Bipartition{n ? Partition{n} : Partition{}, {}});
    std::vector<Part> ones(static_cast<std::size_t>(2 * n + 1), 1);
    auto sd = springer_index_data(classify(Partition(ones), GroupType::make(1, 2 * n + 1)), CharFn());
    CHECK(springer_bipartition(sd) == Bipartition{{}, Partition(std::vector<Part>(static_cast<std::size_t>(n), 1))});
  }
  CHECK(springer_bipartition(sdata({2}, -1, {})) == Bipartition::parse("[1|]"));
  CHECK(springer_bipartition(sdata({5, 3, 1}, 1, {})) == Bipartition::parse("[2|2]"));
  CHECK(springer_bipartition(sdata({5, 3, 1}, 1, {1, 3})) == Bipartition::parse("[2,2|]"));
  CHECK(springer_bipartition(sdata({5, 3, 1}, 1, {3, 5})) == Bipartition::parse("[|4]"));
  CHECK(code_of([] { springer_bipartition(sdata({5, 3, 1}, 1, {1, 5})); }) == Errc::NotSpringerType);
  CHECK(code_of([] { springer_bipartition(sdata({2}, -1, {2})); }) == Errc::NotSpringerType);
}

TEST_CASE("Springer map is injective with the right sizes") {
  for (auto& cp : good_classes(16)) {
    std::set<Bipartition> seen;
    for (auto& e : char_group(cp)) {
      auto sd = springer_index_data(cp, e);
      if (!is_springer_type(sd)) continue;
      auto b = springer_bipartition(sd);
      CHECK(b.n() == cp.gt().rank());
      CHECK(zero_part_violations(sd).empty());
      CHECK(seen.insert(b).second);
    }
  }
}

TEST_CASE("tableaux") {
  for (Part n = 0; n <= 5; ++n) {
    auto t = green_tableaux(sdata({2 * n + 1}, 1, {}), n + 1, 1);
    REQUIRE(t.size() == 1);
    CHECK(t[0].rows == std::vector<std::vector<std::size_t>>{{1}});
    CHECK(p_set(sdata({2 * n + 1}, 1, {}), n + 1, 1) ==
          std::set<Bipartition>{{n ? Partition{n} : Partition{}, {}}});
  }
  auto sd = sdata({5, 3, 1}, 1, {1, 3});
  for (auto& t : green_tableaux(sd, 5, 1)) {
    std::vector<std::size_t> rest;
    for (std::size_t i = 1; i <= sd.ell; ++i)
      if (std::find(t.rows[0].begin(), t.rows[0].end(), i) == t.rows[0].end()) rest.push_back(i);
    CHECK(rest == sd.Xeps);
  }
  CHECK(p_set(sdata({5, 3, 1}, 1, {}), 5, 1) == std::set<Bipartition>{Bipartition::parse("[4|]")});
  CHECK(p_set(sd, 5, 1) == std::set<Bipartition>{Bipartition::parse("[2,2|]")});
  CHECK(p_set(sdata({5, 3, 1}, 1, {3, 5}), 5, 1) == std::set<Bipartition>{Bipartition::parse("[|4]")});
  CHECK(code_of([] { green_tableaux(sdata({5, 3, 1}, 1, {1, 5}), 5, 1); }) == Errc::NotSpringerType);
}

TEST_CASE("tableau shape") {
  for (auto& cp : good_classes(16))
    for (auto& e : char_group(cp)) {
      auto sd = springer_index_data(cp, e);
      if (!is_springer_type(sd)) continue;
      auto [D, t] = delta_tau(cp.gt());
      auto run = green_tableaux_run(sd, D, t);
      CHECK(run.dead_ends == 0);
      CHECK(!run.tableaux.empty());
      for (auto& tb : run.tableaux) {
        std::vector<std::size_t> all;
        for (auto& row : tb.rows) {
          for (std::size_t k = 1; k < row.size(); ++k) {
            CHECK(row[k - 1] < row[k]);
            CHECK(sd.epsbar[row[k - 1]] == -sd.epsbar[row[k]]);
          }
          all.insert(all.end(), row.begin(), row.end());
        }
        std::sort(all.begin(), all.end());
        CHECK(all.size() == sd.ell);
        for (std::size_t i = 0; i < all.size(); ++i) CHECK(all[i] == i + 1);
        CHECK(tableau_bipartition(sd, tb).n() == cp.gt().rank());
      }
    }
}

TEST_CASE("dominance sequences") {
  CHECK(lambda_seq(Bipartition{}, 2, 1, 4) == std::vector<Part>{2, 1, 0, 0});
  auto x = Bipartition::parse("[2,1|1]");
  CHECK(lambda_seq(x, 4, 1, 10) == lambda_seq(x, 4, 1, 10));
  CHECK(leq_dominance(x, x, 4, 1));
  for (Part n = 1; n <= 8; ++n) {
    auto [D, t] = delta_tau(GroupType::make(1, 2 * n + 1));
    for (Part j = 0; j <= n / 2; ++j)
      for (Part k = j; k <= n / 2; ++k) CHECK(leq_dominance(E(1, n, k), E(1, n, j), D, t));
    for (Part j = 0; j + 1 <= n / 2; ++j) CHECK_FALSE(leq_dominance(E(1, n, j), E(1, n, j + 1), D, t));
  }
}

TEST_CASE("prefix cutoff is stable") {
  for (Part n = 0; n <= 5; ++n) {
    auto all = all_bipartitions(n);
    for (auto [D, t] : {std::pair<Part, Part>{n + 1, 1}, {n + 1, 2 * n + 1}})
      for (auto& x : all)
        for (auto& y : all) {
          std::size_t c = safe_cutoff(x, y, D, t);
          auto a = lambda_seq(x, D, t, 4 * c), b = lambda_seq(y, D, t, 4 * c);
          Part sa = 0, sb = 0;
          for (std::size_t k = 0; k < 4 * c; ++k) {
            sa += a[k];
            sb += b[k];
            if (k >= c) CHECK(sa == sb);
          }
        }
  }
}

TEST_CASE("weak sphericity") {
  CHECK(weakly_spherical(sdata({5, 3, 1}, 1, {})));
  CHECK(weakly_spherical(sdata({5, 3, 1}, 1, {1, 3})));
  CHECK_FALSE(weakly_spherical(sdata({5, 3, 1}, 1, {3, 5})));
  for (Part n = 0; n <= 6; ++n) CHECK(weakly_spherical(sdata({2 * n + 1}, 1, {})));
  auto big = classify(Partition{5, 4, 4, 3, 1}, GroupType::make(1, 17));
  for (IntSet e : {IntSet{}, IntSet{1, 3}, IntSet{3, 5}})
    CHECK(weakly_spherical_general(big, CharFn(e)) == weakly_spherical(sdata({5, 3, 1}, 1, e)));
  auto pairs = classify(Partition{10, 10, 4, 4, 3}, GroupType::make(1, 31));
  CHECK(weakly_spherical_general(pairs, CharFn()));
  CHECK(code_of([] { springer_index_data(classify(Partition{4, 4, 1}, GroupType::make(1, 9)), CharFn()); }) ==
        Errc::BadParity);
  CHECK(code_of([] { sdata({5, 3, 1}, 1, {2}); }) == Errc::ParseError);
}

TEST_CASE("index sets against component data") {
  for (auto& cp : good_classes(18)) {
    auto sd = springer_index_data(cp, CharFn());
    std::vector<std::size_t> from_max;
    for (std::size_t i : sd.X)
      if (set_contains(sd.S_max, sd.lam(i))) from_max.push_back(i);
    // For s = +1 with λ_1 outside S_0, index 1 lies in S_max but not in X^s.
    if (cp.s() == 1 && !set_contains(cp.S0(), sd.lam(1))) std::erase(from_max, std::size_t{1});
    CHECK(from_max == sd.Xs);
    for (auto& e : char_group(cp)) {
      auto d = springer_index_data(cp, e);
      CHECK(in_canonical_subgroup(cp, e) == std::includes(d.Xs.begin(), d.Xs.end(), d.Xeps.begin(), d.Xeps.end()));
    }
  }
}
