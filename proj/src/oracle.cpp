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

#include "oracle.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

#include "errors.hpp"

namespace lmax {
namespace {

// m^n, or -1 as soon as it passes `cap` (no overflow).
std::int64_t checked_pow(std::int64_t m, std::int64_t n, std::int64_t cap) {
  std::int64_t p = 1;
  for (std::int64_t i = 0; i < n; ++i) {
    if (p > cap / m) return -1;
    p *= m;
  }
  return p;
}

std::int64_t require_enum_budget(const Instance& instance,
                                 const Limits& limits) {
  const std::int64_t count = checked_pow(instance.num_machines(),
                                         instance.num_jobs(), limits.enum_cap);
  if (count < 0)
    throw ResourceLimitError(
        "oracle would enumerate " + std::to_string(instance.num_machines()) +
        "^" + std::to_string(instance.num_jobs()) +
        " assignments; enumeration cap is " + std::to_string(limits.enum_cap));
  return count;
}

}  // namespace

OptimalResult brute_force_min_lmax(const Instance& instance,
                                   const Limits& limits) {
  OptimalResult result;
  const std::int32_t n = instance.num_jobs();
  const std::int32_t m = instance.num_machines();
  if (n == 0) return result;
  check_job_ids(instance);
  const std::int64_t count = require_enum_budget(instance, limits);

  const std::vector<std::int32_t> order = edd_order(instance);
  std::vector<std::int32_t> machine_of(n, 0);
  std::vector<std::int64_t> load(m, 0);

  bool have_best = false;
  std::int64_t best_lmax = 0;
  std::vector<std::int32_t> best(machine_of);

  for (std::int64_t code = 0; code < count; ++code) {
    std::int64_t rest = code;
    for (std::int32_t i = n - 1; i >= 0; --i) {
      machine_of[i] = static_cast<std::int32_t>(rest % m);
      rest /= m;
    }
    std::fill(load.begin(), load.end(), 0);
    std::int64_t lmax = std::numeric_limits<std::int64_t>::min();
    for (std::int32_t position : order) {
      const Job& job = instance.jobs[position];
      const std::int32_t machine = machine_of[job.id];
      load[machine] += job.work;
      lmax = std::max(lmax, instance.machines.rates[machine] * load[machine] -
                                job.deadline);
    }
    if (!have_best || lmax < best_lmax) {
      have_best = true;
      best_lmax = lmax;
      best = machine_of;
    }
  }

  result.lmax = best_lmax;
  result.assignment.machine_of = std::move(best);
  return result;
}

bool brute_force_feasible(const Instance& instance, std::int64_t bound,
                          const Limits& limits) {
  if (instance.num_jobs() == 0) return true;
  return *brute_force_min_lmax(instance, limits).lmax <= bound;
}

bool brute_force_all_orders_feasible(const Instance& instance,
                                     const Limits& limits) {
  const std::int32_t n = instance.num_jobs();
  const std::int32_t m = instance.num_machines();
  if (n == 0) return true;
  if (n > 6)
    throw ResourceLimitError("all-orders oracle is limited to 6 jobs, got " +
                             std::to_string(n));
  check_job_ids(instance);
  const std::int64_t count = require_enum_budget(instance, limits);

  // Machines do not interact, so an assignment works iff each machine's job
  // set admits SOME order meeting its deadlines; permutations are checked
  // per machine instead of as one big cross product.
  const auto machine_can_finish = [&](const std::vector<std::int32_t>& jobs,
                                      std::int64_t rate) {
    if (jobs.empty()) return true;
    std::vector<std::int32_t> perm(jobs);
    std::sort(perm.begin(), perm.end());
    do {
      std::int64_t work = 0;
      bool ok = true;
      for (std::int32_t job_id : perm) {
        work += instance.jobs[job_id].work;
        if (rate * work > instance.jobs[job_id].deadline) {
          ok = false;
          break;
        }
      }
      if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
  };

  std::vector<std::int32_t> machine_of(n, 0);
  std::vector<std::vector<std::int32_t>> on_machine(m);
  for (std::int64_t code = 0; code < count; ++code) {
    std::int64_t rest = code;
    for (std::int32_t i = n - 1; i >= 0; --i) {
      machine_of[i] = static_cast<std::int32_t>(rest % m);
      rest /= m;
    }
    for (auto& jobs : on_machine) jobs.clear();
    for (std::int32_t i = 0; i < n; ++i)
      on_machine[machine_of[instance.jobs[i].id]].push_back(i);

    bool all_ok = true;
    for (std::int32_t j = 0; j < m && all_ok; ++j)
      all_ok = machine_can_finish(on_machine[j], instance.machines.rates[j]);
    if (all_ok) return true;
  }
  return false;
}

}  // namespace lmax
