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

#include "oracles.hpp"
#include "upkit/pieces.hpp"

using namespace upkit;

namespace {

const ClassPartition kExample =
    classify(Partition::parse("11,10^2,9^2,7^4,5^3,4^2,3^2,1"), GroupType::make(1, 107));

}  // namespace

TEST_CASE("I and J fixtures") {
  auto pd = [](std::initializer_list<Part> p, int s) { return piece_data(classify(Partition(p), s)); };
  CHECK(pd({5, 3, 1}, 1).J == IntSet{4});
  CHECK(pd({5, 3, 1}, 1).I.empty());
  CHECK(pd({4, 4, 1}, 1).I == IntSet{4});
  CHECK(pd({2}, -1).J.empty());
  CHECK(pd({2, 2}, -1).J == IntSet{1});
  CHECK(pd({2, 2}, -1).I.empty());
  CHECK(pd({4, 2}, -1).J == IntSet{1});
  CHECK(pd({6, 4, 2}, -1).J == IntSet{3});
  auto ex = piece_data(kExample);
  CHECK(ex.I == IntSet{4});
  CHECK(ex.J == IntSet{6, 8, 10});
}

TEST_CASE("T moves") {
  auto lam = classify(Partition{5, 3, 1}, 1);
  CHECK(T_down(lam, {4}).lambda() == Partition{4, 4, 1});
  CHECK(T_down(lam, {}).lambda() == lam.lambda());
  CHECK(T_up(classify(Partition{4, 4, 1}, 1), {4}).lambda() == lam.lambda());
  CHECK(T_up(lam, {}).lambda() == lam.lambda());
  CHECK_THROWS_WITH_AS(T_up(classify(Partition{2, 2}, -1), {2}), doctest::Contains("NotInI"), Error);
  CHECK_THROWS_WITH_AS(T_down(lam, {2}), doctest::Contains("NotInJ"), Error);

  auto moved = T_down(kExample, {6, 10});
  Partition want = union_of(difference(kExample.lambda(), Partition{5, 7, 9, 11}), Partition{6, 6, 10, 10});
  CHECK(moved.lambda() == want);
}

TEST_CASE("T moves shift I and J and invert") {
  for (int s : {1, -1})
    for (Part N = s == 1 ? 1 : 2; N <= 20; N += 2)
      for (auto& cp : enumerate_classes(GroupType::make(s, N))) {
        auto pd = piece_data(cp);
        for (auto& m : special_piece(cp)) {
          auto pm = piece_data(m.mu);
          CHECK(pm.I == set_union(pd.I, m.J));
          CHECK(pm.J == set_minus(pd.J, m.J));
          CHECK(T_up(m.mu, m.J).lambda() == cp.lambda());
        }
      }
}

TEST_CASE("special piece fixtures") {
  auto names = [](const ClassPartition& cp) {
    std::vector<Partition> out;
    for (auto& m : special_piece(cp)) out.push_back(m.mu.lambda());
    std::sort(out.begin(), out.end());
    return out;
  };
  CHECK(names(classify(Partition{5, 3, 1}, 1)) == std::vector<Partition>{Partition{4, 4, 1}, Partition{5, 3, 1}});
  CHECK(names(classify(Partition{9}, 1)) == std::vector<Partition>{Partition{9}});
  CHECK(names(classify(Partition{9, 7, 5, 3, 1}, 1)).size() == 4);
}

TEST_CASE("special means the transpose lies in P^s") {
  for (int s : {1, -1})
    for (Part N = s == 1 ? 1 : 2; N <= 20; N += 2)
      for (auto& cp : enumerate_classes(GroupType::make(s, N)))
        CHECK(is_special(cp) == testing::naive_in_Ps(transpose(cp.lambda()).parts(), s));
  CHECK(is_special(classify(Partition{5, 3, 1}, 1)));
  CHECK_FALSE(is_special(classify(Partition{4, 4, 1}, 1)));
  CHECK(is_special(classify(Partition{2, 2}, -1)));
}

TEST_CASE("collapse is the dominance maximum below") {
  for (Part n = 1; n <= 12; ++n)
    for (auto& v : testing::naive_partitions(n))
      for (int s : {1, -1}) {
        if ((s == 1) != (n % 2 == 1)) continue;
        CHECK(collapse(Partition(v), s) == Partition(testing::naive_collapse(v, s)));
      }
}

TEST_CASE("duality fixtures") {
  CHECK(bvls_dual(classify(Partition{9}, 1)).lambda() == Partition::parse("1^8"));
  CHECK(bvls_dual(classify(Partition::parse("1^9"), 1)).lambda() == Partition{8});
  CHECK(bvls_dual(classify(Partition{5, 3, 1}, 1)).lambda() == bvls_dual(classify(Partition{4, 4, 1}, 1)).lambda());
  CHECK(bvls_dual(classify(Partition{8}, -1)).lambda() == Partition::parse("1^9"));
}

TEST_CASE("duality against the brute-force collapse") {
  for (int s : {1, -1})
    for (Part N = s == 1 ? 1 : 2; N <= 12; N += 2)
      for (auto& cp : enumerate_classes(GroupType::make(s, N))) {
        std::vector<Part> t = transpose(cp.lambda()).parts();
        if (s == 1) {
          t.back() -= 1;
          if (t.back() == 0) t.pop_back();
        } else {
          t.front() += 1;
        }
        CHECK(bvls_dual(cp).lambda() == Partition(testing::naive_collapse(t, -s)));
      }
}

TEST_CASE("special pieces form a hypercube in dominance order") {
  for (int s : {1, -1})
    for (Part N = s == 1 ? 1 : 2; N <= 18; N += 2)
      for (auto& cp : enumerate_classes(GroupType::make(s, N))) {
        if (!is_special(cp)) continue;
        auto sp = special_piece(cp);
        for (auto& a : sp)
          for (auto& b : sp)
            CHECK(dominated_by(b.mu.lambda(), a.mu.lambda()) == set_subset(a.J, b.J));
      }
}

TEST_CASE("neighbouring J entries force even multiplicity") {
  for (int s : {1, -1})
    for (Part N = s == 1 ? 1 : 2; N <= 20; N += 2)
      for (auto& cp : enumerate_classes(GroupType::make(s, N))) {
        auto J = piece_data(cp).J;
        for (Part c : J)
          if (set_contains(J, c + 2)) CHECK(cp.lambda().multiplicity(c + 1) % 2 == 0);
      }
}
