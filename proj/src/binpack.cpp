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

#include "binpack.hpp"

#include <algorithm>
#include <string>

#include "errors.hpp"
#include "feasibility.hpp"

namespace lmax {
namespace {

void require_packable(const BinPackInstance& bp) {
  if (bp.bin_capacity < 1) throw PreconditionError("bin capacity must be >= 1");
  for (std::int64_t size : bp.item_sizes) {
    if (size < 1) throw PreconditionError("item sizes must be >= 1");
    if (size > bp.bin_capacity)
      throw PreconditionError("item size " + std::to_string(size) +
                              " exceeds bin capacity " +
                              std::to_string(bp.bin_capacity));
  }
}

}  // namespace

Instance to_scheduling_instance(const BinPackInstance& bp, std::int64_t m) {
  if (m < 1) throw PreconditionError("machine count must be >= 1");
  Instance instance;
  instance.machines.rates.assign(static_cast<std::size_t>(m), 1);
  instance.jobs.reserve(bp.item_sizes.size());
  for (std::size_t i = 0; i < bp.item_sizes.size(); ++i) {
    Job job;
    job.work = bp.item_sizes[i];
    job.deadline = bp.bin_capacity;
    job.id = static_cast<std::int32_t>(i);
    instance.jobs.push_back(job);
  }
  return instance;
}

PackingResult min_bins(const BinPackInstance& bp, BinPackStrategy strategy,
                       const Limits& limits) {
  const std::int64_t n = bp.num_items();
  if (n < 1) throw PreconditionError("min bins needs at least one item");
  require_packable(bp);

  const auto try_m = [&](std::int64_t m) {
    return feasible_general(to_scheduling_instance(bp, m), limits);
  };

  std::int64_t best_m = n;  // one item per bin always fits (sizes <= capacity)
  FeasibilityResult best;
  if (strategy == BinPackStrategy::kScanAscending) {
    for (std::int64_t m = 1; m <= n; ++m) {
      best = try_m(m);
      if (best.feasible) {
        best_m = m;
        break;
      }
    }
  } else {
    std::int64_t lo = 1;
    std::int64_t hi = n;
    best = try_m(hi);
    while (lo < hi) {
      const std::int64_t mid = lo + (hi - lo) / 2;
      FeasibilityResult r = try_m(mid);
      if (r.feasible) {
        best = std::move(r);
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    best_m = lo;
  }
  if (!best.feasible)
    throw InternalError("one item per bin must always pack");

  PackingResult result;
  result.bins = best_m;
  result.bin_of = std::move(best.witness->machine_of);
  return result;
}

std::int64_t brute_force_min_bins(const BinPackInstance& bp) {
  const std::int32_t n = bp.num_items();
  if (n < 1) throw PreconditionError("min bins needs at least one item");
  if (n > 10)
    throw ResourceLimitError(
        "brute-force packing is limited to 10 items, got " +
        std::to_string(n));
  require_packable(bp);

  std::vector<std::int64_t> load;
  load.reserve(n);
  std::int64_t best = n;

  // Item by item; opening a bin always means the next fresh index, so each
  // set partition is visited exactly once.
  const auto dfs = [&](auto&& self, std::int32_t item) -> void {
    if (static_cast<std::int64_t>(load.size()) >= best) return;
    if (item == n) {
      best = static_cast<std::int64_t>(load.size());
      return;
    }
    const std::int64_t size = bp.item_sizes[item];
    for (std::size_t b = 0; b < load.size(); ++b) {
      if (load[b] + size <= bp.bin_capacity) {
        load[b] += size;
        self(self, item + 1);
        load[b] -= size;
      }
    }
    load.push_back(size);
    self(self, item + 1);
    load.pop_back();
  };
  dfs(dfs, 0);
  return best;
}

}  // namespace lmax
