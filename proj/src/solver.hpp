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
#include <optional>

#include "feasibility.hpp"
#include "instance.hpp"
#include "limits.hpp"

namespace lmax {

/// An exact optimum: the minimum achievable maximum lateness (empty for the
/// zero-job instance), a witness schedule attaining it, and the number of
/// feasibility probes the search spent.
struct OptimalResult {
  std::optional<std::int64_t> lmax;
  Assignment assignment;
  std::int64_t probes = 0;
};

/// Bracket for the lateness search: probe(hi) is always feasible, and no
/// schedule can beat lo.
struct SearchBounds {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

/// Is there a schedule whose maximum lateness is at most `bound`? Shifts
/// every deadline up by `bound` and asks the feasibility dp.
FeasibilityResult probe(const Instance& instance, std::int64_t bound,
                        const Limits& limits = {});

/// lo = -max deadline (completions are nonnegative, so no job can be earlier
/// than that); hi = max_rate * W - min deadline (stack everything on one
/// machine and every job lands by max_rate * W). Requires n >= 1.
SearchBounds search_bounds(const Instance& instance);

/// Minimizes the maximum lateness by bisecting `bound` over [lo, hi] with
/// feasibility probes. The reported value is recomputed from the witness
/// schedule, so the result is self-verifying; the search supplies the
/// matching infeasibility certificate one below.
OptimalResult min_lmax(const Instance& instance, const Limits& limits = {});

}  // namespace lmax
