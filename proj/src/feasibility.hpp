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

#include "bitvec.hpp"
#include "instance.hpp"
#include "limits.hpp"

namespace lmax {

/// Outcome of a feasibility check: can every job meet its deadline? When
/// feasible, `witness` holds an assignment whose evaluated lmax is <= 0.
struct FeasibilityResult {
  bool feasible = false;
  std::optional<Assignment> witness;
};

/// The layered dp over work-allocation vectors. Layer i covers the first i
/// jobs in deadline order; a cell (w_1, ..., w_{m-1}) is set iff some
/// deadline-respecting schedule of that prefix loads machine j with exactly
/// w_j work units for every j < m (machine m's load is the remainder).
///
/// Cells are indexed in mixed radix: index = sum of w_j * stride[j]. Each
/// coordinate ranges over [0, extent_j) with
/// extent_j = min(W, max_deadline / rate_j) + 1: a machine loaded beyond its
/// deadline horizon can never appear in a set cell, so those columns are
/// dropped rather than stored.
struct DpTable {
  std::vector<std::int64_t> extents;   // m-1 entries
  std::vector<std::int64_t> strides;   // m-1 entries, strides[0] = 1
  std::vector<BitVec> layers;          // up to n+1; shorter iff a layer went
                                       // all-false (infeasible, cut early)
  std::vector<std::int32_t> order;     // deadline order the layers follow
};

/// Decides feasibility of exactly two unit-rate machines with the dedicated
/// two-machine table over (job prefix, finishing time of machine one).
/// Throws PreconditionError unless the instance has exactly 2 machines, both
/// rate 1. Kept fully independent of the general path; the two must agree.
FeasibilityResult feasible_two_machines(const Instance& instance,
                                        const Limits& limits = {});

/// The two-machine table itself: row i holds the reachable machine-one
/// finishing times over [0, W] after the first i jobs in deadline order.
/// Rows stop early after an all-false row. Exposed for table-level checks.
std::vector<BitVec> compute_two_machine_rows(const Instance& instance,
                                             const Limits& limits = {});

/// Decides feasibility for any m >= 1 and any integer rates. Throws
/// ResourceLimitError when the table would exceed limits.memory_cap_bits,
/// naming the required size.
FeasibilityResult feasible_general(const Instance& instance,
                                   const Limits& limits = {});

/// Builds all dp layers for `instance` (deadline order, tightened extents).
/// Returns early (fewer than n+1 layers) once a layer has no set cells.
DpTable compute_feasibility_table(const Instance& instance,
                                  const Limits& limits = {});

/// Walks a completed table backwards from the first set cell of the last
/// layer and returns the machine choice per job (original job ids).
/// Requires table.layers.size() == n+1 with a nonempty final layer; throws
/// InternalError if no transition explains a step (a dp bug, not bad input).
Assignment reconstruct_assignment(const DpTable& table,
                                  const Instance& instance);

}  // namespace lmax
