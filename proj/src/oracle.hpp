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

#include "instance.hpp"
#include "limits.hpp"
#include "solver.hpp"

namespace lmax {

// Exponential-time reference solvers. They share nothing with the dp path:
// every answer here comes from evaluate_schedule over explicit enumeration,
// which is what makes them usable as an independent check.

/// Enumerates all m^n assignments (job 0 as the most significant base-m
/// digit, so the first optimum found is the lexicographically smallest) and
/// returns the best. Throws ResourceLimitError when m^n > limits.enum_cap.
OptimalResult brute_force_min_lmax(const Instance& instance,
                                   const Limits& limits = {});

/// True iff some assignment achieves maximum lateness <= bound.
bool brute_force_feasible(const Instance& instance, std::int64_t bound,
                          const Limits& limits = {});

/// True iff some assignment combined with ANY per-machine job orderings
/// meets every deadline — no deadline-order assumption anywhere. Requires
/// n <= 6 (it walks every permutation of every machine's job set).
bool brute_force_all_orders_feasible(const Instance& instance,
                                     const Limits& limits = {});

}  // namespace lmax
