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

#include <numeric>
#include <vector>

#include "binpack.hpp"
#include "doctest.h"
#include "errors.hpp"
#include "feasibility.hpp"
#include "rng.hpp"

using namespace lmax;

namespace {

BinPackInstance bp(std::vector<std::int64_t> sizes, std::int64_t capacity) {
  BinPackInstance instance;
  instance.item_sizes = std::move(sizes);
  instance.bin_capacity = capacity;
  return instance;
}

// Independent fit check: depth-first item placement into at most m bins.
bool fits_in_bins(const BinPackInstance& instance, std::int64_t m) {
  std::vector<std::int64_t> load;
  const auto dfs = [&](auto&& self, std::size_t item) -> bool {
    if (item == instance.item_sizes.size()) return true;
    const std::int64_t size = instance.item_sizes[item];
    for (std::size_t b = 0; b < load.size(); ++b) {
      if (load[b] + size <= instance.bin_capacity) {
        load[b] += size;
        if (self(self, item + 1)) return true;
        load[b] -= size;
      }
    }
    if (static_cast<std::int64_t>(load.size()) < m) {
      load.push_back(size);
      if (self(self, item + 1)) return true;
      load.pop_back();
    }
    return false;
  };
  return dfs(dfs, 0);
}

void check_packing(const BinPackInstance& instance, const PackingResult& result) {
  std::vector<std::int64_t> load(static_cast<std::size_t>(result.bins), 0);
  REQUIRE(result.bin_of.size() == instance.item_sizes.size());
  for (std::size_t i = 0; i < instance.item_sizes.size(); ++i) {
    REQUIRE(result.bin_of[i] >= 0);
    REQUIRE(result.bin_of[i] < result.bins);
    load[static_cast<std::size_t>(result.bin_of[i])] += instance.item_sizes[i];
  }
  for (std::int64_t used : load) CHECK(used <= instance.bin_capacity);
}

BinPackInstance random_bp(std::uint64_t seed) {
  SplitMix64 rng(seed);
  const std::int64_t n = rng.in_range(1, 8);
  const std::int64_t capacity = rng.in_range(8, 12);
  BinPackInstance instance;
  instance.bin_capacity = capacity;
  for (std::int64_t i = 0; i < n; ++i)
    instance.item_sizes.push_back(rng.in_range(1, 8));
  return instance;
}

}  // namespace

TEST_CASE("the reduction copies sizes into unit-rate jobs with deadline b") {
  const Instance a = to_scheduling_instance(bp({3, 3}, 3), 2);
  CHECK(a.machines.rates == std::vector<std::int64_t>{1, 1});
  REQUIRE(a.num_jobs() == 2);
  CHECK(a.jobs[0].work == 3);
  CHECK(a.jobs[0].deadline == 3);
  CHECK(a.jobs[1].work == 3);
  CHECK(a.jobs[1].deadline == 3);

  const Instance b = to_scheduling_instance(bp({1}, 5), 1);
  REQUIRE(b.num_jobs() == 1);
  CHECK(b.jobs[0].work == 1);
  CHECK(b.jobs[0].deadline == 5);
}

TEST_CASE("scheduling feasibility equals bin fit on an exhaustive grid") {
  // All multisets of up to 7 items drawn from sizes {1..4}, capacities 4..6,
  // machine counts 1..3.
  for (std::int64_t capacity = 4; capacity <= 6; ++capacity) {
    std::vector<std::vector<std::int64_t>> stack{{}};
    while (!stack.empty()) {
      const std::vector<std::int64_t> sizes = stack.back();
      stack.pop_back();
      if (sizes.size() < 7) {
        const std::int64_t lowest = sizes.empty() ? 1 : sizes.back();
        for (std::int64_t s = lowest; s <= 4; ++s) {
          auto next = sizes;
          next.push_back(s);
          stack.push_back(std::move(next));
        }
      }
      if (sizes.empty()) continue;
      const BinPackInstance instance = bp(sizes, capacity);
      for (std::int64_t m = 1; m <= 3; ++m) {
        CHECK(feasible_general(to_scheduling_instance(instance, m)).feasible ==
              fits_in_bins(instance, m));
      }
    }
  }
}

TEST_CASE("min_bins on pinned instances") {
  CHECK(min_bins(bp({4, 4, 4, 4, 4, 4}, 12)).bins == 2);
  CHECK(min_bins(bp({5, 5, 5, 5}, 10)).bins == 2);
  CHECK(min_bins(bp({6, 5, 4, 3, 2}, 10)).bins == 2);  // {6,4} and {5,3,2}
  CHECK(min_bins(bp({1}, 1)).bins == 1);
}

TEST_CASE("min_bins returns a valid packing witness") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const BinPackInstance instance = random_bp(500 + seed);
    const PackingResult result = min_bins(instance);
    check_packing(instance, result);
  }
}

TEST_CASE("scan and bisect strategies return the same count") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const BinPackInstance instance = random_bp(9000 + seed);
    CHECK(min_bins(instance, BinPackStrategy::kScanAscending).bins ==
          min_bins(instance, BinPackStrategy::kBisect).bins);
  }
}

TEST_CASE("feasibility is monotone in the machine count") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const BinPackInstance instance = random_bp(600 + seed);
    bool seen = false;
    for (std::int64_t m = 1; m <= instance.num_items(); ++m) {
      const bool ok =
          feasible_general(to_scheduling_instance(instance, m)).feasible;
      if (seen) CHECK(ok);
      seen = seen || ok;
    }
    CHECK(seen);
  }
}

TEST_CASE("brute-force packing on pinned instances") {
  CHECK(brute_force_min_bins(bp({1, 1, 1}, 3)) == 1);
  CHECK(brute_force_min_bins(bp({2, 2}, 3)) == 2);
  CHECK(brute_force_min_bins(bp({6, 5, 4, 3, 2}, 10)) == 2);
}

TEST_CASE("reduction count matches brute force on random instances") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const BinPackInstance instance = random_bp(7000 + seed);
    const PackingResult result = min_bins(instance);
    CHECK(result.bins == brute_force_min_bins(instance));
    CHECK(result.bins >= (std::accumulate(instance.item_sizes.begin(),
                                          instance.item_sizes.end(),
                                          std::int64_t{0}) +
                          instance.bin_capacity - 1) /
                             instance.bin_capacity);
  }
}

TEST_CASE("packing preconditions and caps") {
  CHECK_THROWS_AS(min_bins(bp({}, 5)), PreconditionError);
  CHECK_THROWS_AS(brute_force_min_bins(bp({}, 5)), PreconditionError);
  CHECK_THROWS_AS(
      brute_force_min_bins(bp({1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}, 5)),
      ResourceLimitError);
  CHECK_THROWS_AS(min_bins(bp({9}, 5)), PreconditionError);
}
