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
#include <vector>

namespace lmax {

/// One job: an integer amount of work and an integer deadline. `id` is the
/// job's 0-based position in the original input and is what witnesses refer
/// to. Deadlines of freshly parsed instances are nonnegative, but shifted
/// copies (see shift_deadlines) may carry any integer deadline.
struct Job {
  std::int64_t work = 0;
  std::int64_t deadline = 0;
  std::int32_t id = 0;
};

/// The machines, as rate parameters: machine j needs rates[j] time units per
/// unit of work. Identical machines are all-ones.
struct MachinePark {
  std::vector<std::int64_t> rates;

  std::int32_t count() const { return static_cast<std::int32_t>(rates.size()); }
};

/// A scheduling instance: machines plus jobs. The unit of input to every
/// solver in this library.
struct Instance {
  MachinePark machines;
  std::vector<Job> jobs;

  std::int32_t num_jobs() const { return static_cast<std::int32_t>(jobs.size()); }
  std::int32_t num_machines() const { return machines.count(); }

  /// Sum of all job work units (W).
  std::int64_t total_work() const;
  std::int64_t max_rate() const;
};

/// A job -> machine map (0-based machine indices). Each machine runs its
/// assigned jobs in deadline order, ties by id, so this is a full schedule.
struct Assignment {
  std::vector<std::int32_t> machine_of;
};

/// What a concrete schedule does: completion times and the resulting maximum
/// lateness. `lmax` is empty for the zero-job instance.
struct LatenessReport {
  std::vector<std::int64_t> per_machine_completion;
  std::vector<std::int64_t> per_job_completion;
  std::optional<std::int64_t> lmax;
};

/// Positions into `jobs` sorted by (deadline ascending, id ascending); for
/// canonical instances (id == position) this is the job ids themselves.
/// Deterministic; the per-machine execution order everywhere in this library.
std::vector<std::int32_t> edd_order(const Instance& instance);

/// Requires the id fields to be a permutation of 0..n-1 (PreconditionError
/// otherwise). Reordered job lists with ids carried along stay usable.
void check_job_ids(const Instance& instance);

/// Copy of `instance` with every deadline moved by `x` (any sign). Throws
/// RangeError if some deadline + x overflows 64 bits.
Instance shift_deadlines(const Instance& instance, std::int64_t x);

/// Simulates the schedule implied by `assignment` and reports completions and
/// maximum lateness. Throws PreconditionError on a malformed assignment
/// (wrong length or machine index out of range).
LatenessReport evaluate_schedule(const Instance& instance,
                                 const Assignment& assignment);

/// Deterministic random instance: rates uniform in [1, max_rate], work in
/// [1, max_work], deadlines in [0, max_deadline], all drawn from SplitMix64
/// seeded with `seed` (rates first, then work/deadline per job). Throws
/// RangeError on invalid bounds or if the result exceeds the solver's
/// 64-bit magnitude budget.
Instance generate_random(std::int64_t n, std::int64_t m, std::int64_t max_work,
                         std::int64_t max_deadline, std::int64_t max_rate,
                         std::uint64_t seed);

/// Checks the input-boundary invariants: m >= 1, every rate >= 1, work >= 0,
/// deadline >= 0, and that max_rate * total_work + max_deadline fits in 64
/// bits (so every later probe stays in range). Throws RangeError.
void validate_input_instance(const Instance& instance);

}  // namespace lmax
