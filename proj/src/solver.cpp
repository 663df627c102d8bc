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

#include "solver.hpp"

#include <algorithm>

#include "errors.hpp"

namespace lmax {

FeasibilityResult probe(const Instance& instance, std::int64_t bound,
                        const Limits& limits) {
  return feasible_general(shift_deadlines(instance, bound), limits);
}

SearchBounds search_bounds(const Instance& instance) {
  if (instance.num_jobs() < 1)
    throw PreconditionError("search bounds need at least one job");

  std::int64_t min_deadline = instance.jobs[0].deadline;
  std::int64_t max_deadline = instance.jobs[0].deadline;
  for (const Job& job : instance.jobs) {
    min_deadline = std::min(min_deadline, job.deadline);
    max_deadline = std::max(max_deadline, job.deadline);
  }

  std::int64_t worst_time = 0;
  if (__builtin_mul_overflow(instance.max_rate(), instance.total_work(),
                             &worst_time))
    throw RangeError("max rate times total work overflows 64 bits");

  SearchBounds bounds;
  if (__builtin_sub_overflow(std::int64_t{0}, max_deadline, &bounds.lo) ||
      __builtin_sub_overflow(worst_time, min_deadline, &bounds.hi))
    throw RangeError("search bounds overflow 64 bits");
  return bounds;
}

OptimalResult min_lmax(const Instance& instance, const Limits& limits) {
  OptimalResult result;
  if (instance.num_jobs() == 0) return result;

  SearchBounds bounds = search_bounds(instance);

  // Feasible by construction; also seeds the witness in case lo == hi.
  FeasibilityResult at_hi = probe(instance, bounds.hi, limits);
  result.probes = 1;
  if (!at_hi.feasible)
    throw InternalError("probe at the upper search bound came back infeasible");
  Assignment best = std::move(*at_hi.witness);

  std::int64_t lo = bounds.lo;
  std::int64_t hi = bounds.hi;
  while (lo < hi) {
    // Floor midpoint, exact for negative bounds too.
    const std::int64_t mid = lo + (hi - lo) / 2;
    FeasibilityResult r = probe(instance, mid, limits);
    ++result.probes;
    if (r.feasible) {
      best = std::move(*r.witness);
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }

  // The witness carries the value; the search carried the certificate.
  result.lmax = evaluate_schedule(instance, best).lmax;
  result.assignment = std::move(best);
  return result;
}

}  // namespace lmax
