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

#pragma once

#include <cstdint>
#include <vector>

#include "binpack_types.hpp"
#include "instance.hpp"
#include "limits.hpp"

namespace lmax {

/// How min_bins locates the smallest feasible machine count. Both give the
/// same answer; the ascending scan is the default because the optimum sits
/// near the volume bound and small machine counts are exponentially cheaper
/// to probe.
enum class BinPackStrategy { kScanAscending, kBisect };

/// An exact packing: the minimum bin count plus an item -> bin map
/// (0-based bins; some bins may stay empty).
struct PackingResult {
  std::int64_t bins = 0;
  std::vector<std::int32_t> bin_of;
};

/// Bin packing as scheduling: m unit-rate machines, item i becomes a job of
/// work item_sizes[i], and every deadline is the bin capacity. The packing
/// fits in m bins iff that instance can meet all deadlines.
Instance to_scheduling_instance(const BinPackInstance& bp, std::int64_t m);

/// The smallest m in [1, n] whose reduced instance is feasible, plus the
/// packing read off the feasibility witness. Requires n >= 1. Feasibility is
/// monotone in m (an idle extra machine never hurts), which is what makes
/// both strategies exact.
PackingResult min_bins(const BinPackInstance& bp,
                       BinPackStrategy strategy = BinPackStrategy::kScanAscending,
                       const Limits& limits = {});

/// Independent reference: depth-first over item -> bin choices with the
/// standard symmetry cut (a new bin is always the lowest empty index).
/// Requires n <= 10.
std::int64_t brute_force_min_bins(const BinPackInstance& bp);

}  // namespace lmax
