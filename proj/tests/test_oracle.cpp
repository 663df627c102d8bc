// Copyright 2026 The lmax-sched Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <vector>

#include "doctest.h"
#include "errors.hpp"
#include "oracle.hpp"
#include "solver.hpp"
#include "test_util.hpp"

using namespace lmax;
using test::make;

TEST_CASE("brute force finds the pigeonhole optimum") {
  const OptimalResult r =
      brute_force_min_lmax(make({1, 1}, {{1, 1}, {1, 1}, {1, 1}}));
  CHECK(*r.lmax == 1);
  // Lexicographically smallest optimal assignment.
  CHECK(r.assignment.machine_of == std::vector<std::int32_t>{0, 0, 1});
}

TEST_CASE("brute force on one machine is the deadline-order chain") {
  const Instance instance = make({1}, {{4, 3}, {2, 2}});
  const OptimalResult r = brute_force_min_lmax(instance);
  Assignment only;
  only.machine_of = {0, 0};
  CHECK(*r.lmax == *evaluate_schedule(instance, only).lmax);
  CHECK(*r.lmax == 3);  // chain (2,2) then (4,3): completions 2, 6
}

TEST_CASE("brute force on two related machines, all four assignments") {
  // (m1,m1) -> 2, (m1,m2) -> 2, (m2,m1) -> 2, (m2,m2) -> 6.
  const OptimalResult r = brute_force_min_lmax(make({1, 2}, {{2, 2}, {2, 2}}));
  CHECK(*r.lmax == 2);
  CHECK(r.assignment.machine_of == std::vector<std::int32_t>{0, 0});
}

TEST_CASE("brute force with no jobs has no value") {
  const OptimalResult r = brute_force_min_lmax(make({1, 1}, {}));
  CHECK_FALSE(r.lmax.has_value());
}

TEST_CASE("brute_force_feasible thresholds the brute optimum") {
  CHECK_FALSE(brute_force_feasible(make({1}, {{5, 4}}), 0));
  CHECK(brute_force_feasible(make({1}, {{5, 4}}), 1));
  CHECK(brute_force_feasible(make({1}, {}), -100));

  const Instance instance = make({1, 2}, {{3, 1}, {1, 0}, {2, 2}});
  CHECK(brute_force_feasible(instance, search_bounds(instance).hi));
}

TEST_CASE("oracle self-consistency at the optimum") {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const Instance instance = generate_random(
        1 + static_cast<std::int64_t>(seed % 6), 2, 5, 9, 2, 2100 + seed);
    const std::int64_t best = *brute_force_min_lmax(instance).lmax;
    CHECK(brute_force_feasible(instance, best));
    CHECK_FALSE(brute_force_feasible(instance, best - 1));
  }
}

TEST_CASE("enumeration cap rejects oversized searches") {
  Limits limits;
  limits.enum_cap = 100;
  CHECK_THROWS_AS(
      brute_force_min_lmax(
          generate_random(8, 3, 3, 9, 1, 1), limits),
      ResourceLimitError);
}

TEST_CASE("all-orders search accepts out-of-order rescues") {
  // Input order fails (second job ends at 3 > 1); running it first works.
  CHECK(brute_force_all_orders_feasible(make({1}, {{2, 3}, {1, 1}})));
  // Whichever job runs last ends at 3, past both deadlines.
  CHECK_FALSE(brute_force_all_orders_feasible(make({1}, {{2, 2}, {1, 1}})));
  CHECK(brute_force_all_orders_feasible(make({1}, {})));
  CHECK_FALSE(brute_force_all_orders_feasible(make({1}, {{2, 1}})));
}

TEST_CASE("all-orders search refuses more than six jobs") {
  CHECK_THROWS_AS(
      brute_force_all_orders_feasible(generate_random(7, 2, 2, 9, 1, 3)),
      ResourceLimitError);
}

TEST_CASE("free ordering never beats deadline ordering (small grid)") {
  // Every multiset of up to 3 jobs drawn from work {1,2}, deadline {0..4},
  // on one and on two unit machines.
  std::vector<std::pair<std::int64_t, std::int64_t>> kinds;
  for (std::int64_t t = 1; t <= 2; ++t)
    for (std::int64_t d = 0; d <= 4; ++d) kinds.emplace_back(t, d);

  const std::int32_t k = static_cast<std::int32_t>(kinds.size());
  for (std::int32_t m = 1; m <= 2; ++m) {
    for (std::int32_t a = 0; a < k; ++a)
      for (std::int32_t b = a; b < k; ++b)
        for (std::int32_t c = b; c < k; ++c) {
          Instance instance;
          instance.machines.rates.assign(m, 1);
          std::int32_t id = 0;
          for (std::int32_t kind : {a, b, c})
            instance.jobs.push_back(
                Job{kinds[kind].first, kinds[kind].second, id++});
          CHECK(brute_force_all_orders_feasible(instance) ==
                brute_force_feasible(instance, 0));
        }
  }
}
