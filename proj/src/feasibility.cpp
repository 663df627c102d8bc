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

#include "feasibility.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "errors.hpp"

namespace lmax {
namespace {

std::vector<std::int64_t> prefix_work(const Instance& instance,
                                      const std::vector<std::int32_t>& order) {
  std::vector<std::int64_t> prefix(order.size() + 1, 0);
  for (std::size_t i = 0; i < order.size(); ++i)
    prefix[i + 1] = prefix[i] + instance.jobs[order[i]].work;
  return prefix;
}

constexpr __int128 kInt128Max =
    static_cast<__int128>((~static_cast<unsigned __int128>(0)) >> 1);

// a * b clamped to the int128 maximum; extents can be astronomical before
// the cap comparison ever happens.
__int128 saturating_mul(__int128 a, std::int64_t b) {
  if (b != 0 && a > kInt128Max / b) return kInt128Max;
  return a * b;
}

void check_table_budget(std::int64_t num_layers, __int128 cells_per_layer,
                        const Limits& limits) {
  const __int128 bits = saturating_mul(cells_per_layer, num_layers);
  if (bits > limits.memory_cap_bits) {
    std::string need = bits <= __int128{9'223'372'036'854'775'807}
                           ? std::to_string(static_cast<std::int64_t>(bits))
                           : std::string("more than 2^63");
    throw ResourceLimitError(
        "feasibility table needs " + need + " bits (" +
        std::to_string(num_layers) + " layers); memory cap is " +
        std::to_string(limits.memory_cap_bits) + " bits");
  }
}

}  // namespace

DpTable compute_feasibility_table(const Instance& instance,
                                  const Limits& limits) {
  const std::int32_t n = instance.num_jobs();
  const std::int32_t m = instance.num_machines();
  if (m < 1) throw PreconditionError("instance needs at least one machine");

  check_job_ids(instance);

  DpTable table;
  table.order = edd_order(instance);
  table.extents.assign(m - 1, 1);
  table.strides.assign(m - 1, 1);

  // A job whose deadline is negative can never finish on time (completions
  // are nonnegative), so the table collapses to the empty-prefix layer.
  std::int64_t max_deadline = 0;
  for (const Job& job : instance.jobs) {
    if (job.deadline < 0) {
      BitVec base(1);
      base.set(0);
      table.layers.push_back(std::move(base));
      return table;
    }
    max_deadline = std::max(max_deadline, job.deadline);
  }

  // Any set cell obeys rate_j * w_j <= deadline of the last job machine j
  // received, so coordinates past max_deadline / rate_j are dead columns.
  const std::int64_t total = instance.total_work();
  __int128 cells = 1;
  for (std::int32_t j = 0; j + 1 < m; ++j) {
    table.extents[j] =
        std::min(total, max_deadline / instance.machines.rates[j]) + 1;
    cells = saturating_mul(cells, table.extents[j]);
  }

  check_table_budget(n + 1, cells, limits);
  const std::size_t num_cells = static_cast<std::size_t>(cells);
  for (std::int32_t j = 1; j + 1 < m; ++j)
    table.strides[j] = table.strides[j - 1] * table.extents[j - 1];

  table.layers.reserve(n + 1);
  BitVec base(num_cells);
  base.set(0);
  table.layers.push_back(std::move(base));

  const std::vector<std::int64_t> prefix = prefix_work(instance, table.order);
  const std::int64_t last_rate = instance.machines.rates[m - 1];
  std::vector<std::int64_t> w(m - 1, 0);

  for (std::int32_t i = 1; i <= n; ++i) {
    const Job& job = instance.jobs[table.order[i - 1]];
    const std::int64_t t = job.work;
    const std::int64_t d = job.deadline;
    const std::int64_t done = prefix[i];

    BitVec next(num_cells);
    bool any = false;
    table.layers[i - 1].for_each_set([&](std::size_t idx) {
      std::int64_t assigned = 0;
      for (std::int32_t j = 0; j + 1 < m; ++j) {
        w[j] = (static_cast<std::int64_t>(idx) / table.strides[j]) %
               table.extents[j];
        assigned += w[j];
      }
      // Job goes last on the implicit machine m: it carries whatever work
      // the explicit coordinates leave over.
      if (last_rate * (done - assigned) <= d) {
        next.set(idx);
        any = true;
      }
      // Job goes last on an explicit machine j; its completion is the
      // machine's rate times its new load.
      for (std::int32_t j = 0; j + 1 < m; ++j) {
        const std::int64_t load = w[j] + t;
        if (instance.machines.rates[j] * load <= d) {
          assert(load < table.extents[j]);
          next.set(idx + static_cast<std::size_t>(t * table.strides[j]));
          any = true;
        }
      }
    });
    if (!any) break;  // no successor layer can ever light up again
    table.layers.push_back(std::move(next));
  }
  return table;
}

Assignment reconstruct_assignment(const DpTable& table,
                                  const Instance& instance) {
  const std::int32_t n = instance.num_jobs();
  const std::int32_t m = instance.num_machines();
  if (static_cast<std::int32_t>(table.layers.size()) != n + 1 ||
      !table.layers[n].any())
    throw PreconditionError("reconstruction needs a complete table whose "
                            "final layer has a reachable cell");

  const std::vector<std::int64_t> prefix = prefix_work(instance, table.order);

  Assignment assignment;
  assignment.machine_of.assign(n, 0);

  std::size_t idx = table.layers[n].find_first();
  std::vector<std::int64_t> w(m - 1, 0);
  std::int64_t assigned = 0;
  for (std::int32_t j = 0; j + 1 < m; ++j) {
    w[j] = (static_cast<std::int64_t>(idx) / table.strides[j]) %
           table.extents[j];
    assigned += w[j];
  }

  for (std::int32_t i = n; i >= 1; --i) {
    const Job& job = instance.jobs[table.order[i - 1]];
    const std::int64_t t = job.work;
    const std::int64_t d = job.deadline;

    bool placed = false;
    for (std::int32_t j = 0; j + 1 < m && !placed; ++j) {
      if (w[j] >= t && instance.machines.rates[j] * w[j] <= d &&
          table.layers[i - 1].get(idx -
                                  static_cast<std::size_t>(t * table.strides[j]))) {
        assignment.machine_of[job.id] = j;
        idx -= static_cast<std::size_t>(t * table.strides[j]);
        w[j] -= t;
        assigned -= t;
        placed = true;
      }
    }
    if (!placed) {
      const std::int64_t remainder = prefix[i] - assigned;
      if (instance.machines.rates[m - 1] * remainder <= d &&
          table.layers[i - 1].get(idx)) {
        assignment.machine_of[job.id] = m - 1;
        placed = true;
      }
    }
    if (!placed)
      throw InternalError("dp reconstruction found no predecessor at layer " +
                          std::to_string(i));
  }
  assert(idx == 0);
  return assignment;
}

FeasibilityResult feasible_general(const Instance& instance,
                                   const Limits& limits) {
  const DpTable table = compute_feasibility_table(instance, limits);
  FeasibilityResult result;
  result.feasible =
      static_cast<std::int32_t>(table.layers.size()) == instance.num_jobs() + 1;
  if (result.feasible) result.witness = reconstruct_assignment(table, instance);
  return result;
}

std::vector<BitVec> compute_two_machine_rows(const Instance& instance,
                                             const Limits& limits) {
  if (instance.num_machines() != 2 || instance.machines.rates[0] != 1 ||
      instance.machines.rates[1] != 1)
    throw PreconditionError(
        "the two-machine path needs exactly 2 machines of rate 1");

  check_job_ids(instance);
  const std::int32_t n = instance.num_jobs();
  const std::int64_t total = instance.total_work();
  check_table_budget(n + 1, __int128{total} + 1, limits);

  const std::vector<std::int32_t> order = edd_order(instance);
  const std::vector<std::int64_t> prefix = prefix_work(instance, order);

  std::vector<BitVec> rows;
  rows.reserve(n + 1);
  BitVec base(static_cast<std::size_t>(total) + 1);
  base.set(0);
  rows.push_back(std::move(base));

  for (std::int32_t i = 1; i <= n; ++i) {
    const Job& job = instance.jobs[order[i - 1]];
    const std::int64_t t = job.work;
    const std::int64_t d = job.deadline;
    const std::int64_t done = prefix[i];

    BitVec next(static_cast<std::size_t>(total) + 1);
    bool any = false;
    rows[i - 1].for_each_set([&](std::size_t cell) {
      const std::int64_t finish_one = static_cast<std::int64_t>(cell);
      // Machine one takes the job and now finishes at finish_one + t.
      if (finish_one + t <= d) {
        next.set(cell + static_cast<std::size_t>(t));
        any = true;
      }
      // Machine two takes it; its completion is the unaccounted-for time.
      if (done - finish_one <= d) {
        next.set(cell);
        any = true;
      }
    });
    if (!any) break;
    rows.push_back(std::move(next));
  }
  return rows;
}

FeasibilityResult feasible_two_machines(const Instance& instance,
                                        const Limits& limits) {
  const std::vector<BitVec> rows = compute_two_machine_rows(instance, limits);
  const std::int32_t n = instance.num_jobs();

  FeasibilityResult result;
  result.feasible = static_cast<std::int32_t>(rows.size()) == n + 1;
  if (!result.feasible) return result;

  const std::vector<std::int32_t> order = edd_order(instance);
  const std::vector<std::int64_t> prefix = prefix_work(instance, order);

  Assignment assignment;
  assignment.machine_of.assign(n, 0);
  std::int64_t finish_one = static_cast<std::int64_t>(rows[n].find_first());
  for (std::int32_t i = n; i >= 1; --i) {
    const Job& job = instance.jobs[order[i - 1]];
    if (finish_one >= job.work && finish_one <= job.deadline &&
        rows[i - 1].get(static_cast<std::size_t>(finish_one - job.work))) {
      assignment.machine_of[job.id] = 0;
      finish_one -= job.work;
    } else if (prefix[i] - finish_one <= job.deadline &&
               rows[i - 1].get(static_cast<std::size_t>(finish_one))) {
      assignment.machine_of[job.id] = 1;
    } else {
      throw InternalError("two-machine reconstruction stuck at row " +
                          std::to_string(i));
    }
  }
  assert(finish_one == 0);
  result.witness = std::move(assignment);
  return result;
}

}  // namespace lmax
