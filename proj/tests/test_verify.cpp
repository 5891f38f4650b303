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

#include "upkit/verify.hpp"

using namespace upkit;

TEST_CASE("suites pass at small bounds") {
  for (const auto& name : suite_names())
    for (const auto& rep : run_suite(name, 10, 2)) {
      INFO(rep.name);
      CHECK(rep.pass());
      CHECK(rep.samples.empty());
    }
}

TEST_CASE("reports do not depend on the worker count") {
  for (const std::string name : {"duality", "dagger", "firstrow", "moeglin"}) {
    auto a = run_suite(name, 12, 1), b = run_suite(name, 12, 4);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].checked == b[i].checked);
      CHECK(a[i].failures == b[i].failures);
      CHECK(a[i].counts == b[i].counts);
    }
  }
}

TEST_CASE("run_items counts exceptions as failures") {
  SuiteReport rep;
  std::vector<int> items{1, 2, 3};
  run_items<int>(rep, items, 2, [](const int& x, ItemOutcome& o) {
    if (x == 2) throw Error(Errc::MalformedOutput, "boom");
    o.check(true, "ok");
  });
  CHECK(rep.checked == 3);
  CHECK(rep.failures == 1);
  REQUIRE(rep.samples.size() == 1);
  CHECK(rep.samples[0].find("boom") != std::string::npos);
  CHECK_FALSE(SuiteReport{}.pass());
}

TEST_CASE("unknown suite") { CHECK_THROWS_AS(run_suite("nope", 8, 1), Error); }
