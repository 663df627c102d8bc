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

#include "instance.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "errors.hpp"
#include "rng.hpp"

namespace lmax {

std::int64_t Instance::total_work() const {
  std::int64_t w = 0;
  for (const Job& job : jobs) {
    if (__builtin_add_overflow(w, job.work, &w))
      throw RangeError("total work overflows 64 bits");
  }
  return w;
}

std::int64_t Instance::max_rate() const {
  std::int64_t r = 1;
  for (std::int64_t rate : machines.rates) r = std::max(r, rate);
  return r;
}

std::vector<std::int32_t> edd_order(const Instance& instance) {
  std::vector<std::int32_t> order(instance.jobs.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::int32_t a, std::int32_t b) {
    const Job& ja = instance.jobs[a];
    const Job& jb = instance.jobs[b];
    if (ja.deadline != jb.deadline) return ja.deadline < jb.deadline;
    return ja.id < jb.id;
  });
  return order;
}

Instance shift_deadlines(const Instance& instance, std::int64_t x) {
  Instance shifted = instance;
  for (Job& job : shifted.jobs) {
    if (__builtin_add_overflow(job.deadline, x, &job.deadline))
      throw RangeError("deadline shift by " + std::to_string(x) +
                       " overflows 64 bits");
  }
  return shifted;
}

void check_job_ids(const Instance& instance) {
  const std::int32_t n = instance.num_jobs();
  std::vector<bool> seen(n, false);
  for (const Job& job : instance.jobs) {
    if (job.id < 0 || job.id >= n || seen[job.id])
      throw PreconditionError("job ids must be a permutation of 0.." +
                              std::to_string(n - 1));
    seen[job.id] = true;
  }
}

LatenessReport evaluate_schedule(const Instance& instance,
                                 const Assignment& assignment) {
  const std::int32_t n = instance.num_jobs();
  const std::int32_t m = instance.num_machines();
  check_job_ids(instance);
  if (static_cast<std::int32_t>(assignment.machine_of.size()) != n)
    throw PreconditionError(
        "assignment has " + std::to_string(assignment.machine_of.size()) +
        " entries, instance has " + std::to_string(n) + " jobs");
  for (std::int32_t machine : assignment.machine_of)
    if (machine < 0 || machine >= m)
      throw PreconditionError("assignment names machine " +
                              std::to_string(machine) + " but only " +
                              std::to_string(m) + " machines exist");

  LatenessReport report;
  report.per_machine_completion.assign(m, 0);
  report.per_job_completion.assign(n, 0);

  // Work accumulates per machine in deadline order; a job's completion is
  // rate * (work on its machine up to and including itself). Everything
  // job-facing is keyed by the id field, so a reordered job list with ids
  // carried along evaluates identically.
  std::vector<std::int64_t> work_on(m, 0);
  std::optional<std::int64_t> worst;
  for (std::int32_t position : edd_order(instance)) {
    const Job& job = instance.jobs[position];
    const std::int32_t machine = assignment.machine_of[job.id];
    work_on[machine] += job.work;
    const std::int64_t completion =
        instance.machines.rates[machine] * work_on[machine];
    report.per_job_completion[job.id] = completion;
    const std::int64_t lateness = completion - job.deadline;
    if (!worst || lateness > *worst) worst = lateness;
  }
  for (std::int32_t j = 0; j < m; ++j)
    report.per_machine_completion[j] = instance.machines.rates[j] * work_on[j];
  report.lmax = worst;
  return report;
}

Instance generate_random(std::int64_t n, std::int64_t m, std::int64_t max_work,
                         std::int64_t max_deadline, std::int64_t max_rate,
                         std::uint64_t seed) {
  if (n < 0) throw RangeError("job count must be >= 0");
  if (m < 1) throw RangeError("machine count must be >= 1");
  if (max_work < 1) throw RangeError("max work must be >= 1");
  if (max_deadline < 0) throw RangeError("max deadline must be >= 0");
  if (max_rate < 1) throw RangeError("max rate must be >= 1");

  SplitMix64 rng(seed);
  Instance instance;
  instance.machines.rates.reserve(static_cast<std::size_t>(m));
  for (std::int64_t j = 0; j < m; ++j)
    instance.machines.rates.push_back(rng.in_range(1, max_rate));
  instance.jobs.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) {
    Job job;
    job.work = rng.in_range(1, max_work);
    job.deadline = rng.in_range(0, max_deadline);
    job.id = static_cast<std::int32_t>(i);
    instance.jobs.push_back(job);
  }
  validate_input_instance(instance);
  return instance;
}

void validate_input_instance(const Instance& instance) {
  if (instance.num_machines() < 1)
    throw RangeError("instance needs at least one machine");
  for (std::int64_t rate : instance.machines.rates)
    if (rate < 1) throw RangeError("machine rates must be >= 1");
  for (std::size_t i = 0; i < instance.jobs.size(); ++i) {
    const Job& job = instance.jobs[i];
    if (job.work < 0) throw RangeError("job work must be >= 0");
    if (job.deadline < 0) throw RangeError("job deadlines must be >= 0");
    if (job.id != static_cast<std::int32_t>(i))
      throw RangeError("job ids must equal their input position");
  }

  // Largest value any solver computes is max_rate * W + max deadline (the
  // upper search bound); require it to fit so no probe can overflow.
  const std::int64_t total = instance.total_work();  // throws on overflow
  std::int64_t worst_time = 0;
  if (__builtin_mul_overflow(instance.max_rate(), total, &worst_time))
    throw RangeError("max rate times total work overflows 64 bits");
  std::int64_t max_deadline = 0;
  for (const Job& job : instance.jobs)
    max_deadline = std::max(max_deadline, job.deadline);
  std::int64_t bound = 0;
  if (__builtin_add_overflow(worst_time, max_deadline, &bound))
    throw RangeError("instance magnitudes exceed the 64-bit solver range");
}

}  // namespace lmax
