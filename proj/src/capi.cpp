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

#include "lmax/lmax.h"

#include <cstring>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "binpack.hpp"
#include "errors.hpp"
#include "feasibility.hpp"
#include "instance.hpp"
#include "limits.hpp"
#include "oracle.hpp"
#include "solver.hpp"
#include "text_io.hpp"

struct lmax_instance {
  lmax::Instance impl;
};

struct lmax_solution {
  std::optional<std::int64_t> value;
  std::vector<std::int32_t> machine_of;
  std::int64_t probes = 0;
};

struct lmax_binpack {
  lmax::BinPackInstance impl;
};

struct lmax_packing {
  std::int64_t bins = 0;
  std::vector<std::int32_t> bin_of;
};

namespace {

thread_local std::string g_last_error = "no error";

lmax_status fail(lmax_status status, const char* msg) {
  g_last_error = msg;
  return status;
}

// Runs f(), translating exceptions into status codes + the thread-local
// message. Nothing this library throws may cross the C boundary.
template <typename F>
lmax_status guarded(F&& f) {
  try {
    f();
    return LMAX_OK;
  } catch (const lmax::ParseError& e) {
    return fail(LMAX_ERR_PARSE, e.what());
  } catch (const lmax::RangeError& e) {
    return fail(LMAX_ERR_RANGE, e.what());
  } catch (const lmax::ResourceLimitError& e) {
    return fail(LMAX_ERR_RESOURCE_LIMIT, e.what());
  } catch (const lmax::PreconditionError& e) {
    return fail(LMAX_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(LMAX_ERR_RESOURCE_LIMIT, "out of memory");
  } catch (const std::exception& e) {
    return fail(LMAX_ERR_INTERNAL, e.what());
  }
}

lmax::Limits to_limits(const lmax_options* opts) {
  lmax::Limits limits;
  if (opts) {
    limits.memory_cap_bits = opts->memory_cap_bits;
    limits.enum_cap = opts->enum_cap;
  }
  return limits;
}

lmax_solution* make_solution(const lmax::OptimalResult& result) {
  auto* sol = new lmax_solution;
  sol->value = result.lmax;
  sol->machine_of = result.assignment.machine_of;
  sol->probes = result.probes;
  return sol;
}

}  // namespace

extern "C" {

void lmax_options_init(lmax_options* opts) {
  if (!opts) return;
  const lmax::Limits defaults;
  opts->memory_cap_bits = defaults.memory_cap_bits;
  opts->enum_cap = defaults.enum_cap;
}

const char* lmax_last_error(void) { return g_last_error.c_str(); }

lmax_status lmax_instance_parse(const char* text, lmax_instance** out) {
  if (!text || !out)
    return fail(LMAX_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    auto* inst = new lmax_instance{lmax::parse_instance(text)};
    *out = inst;
  });
}

lmax_status lmax_instance_create(int64_t num_machines, const int64_t* rates,
                                 int64_t num_jobs, const int64_t* work,
                                 const int64_t* deadlines,
                                 lmax_instance** out) {
  if (!out || num_machines < 0 || num_jobs < 0 || (num_machines > 0 && !rates) ||
      (num_jobs > 0 && (!work || !deadlines)))
    return fail(LMAX_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    lmax::Instance instance;
    instance.machines.rates.assign(rates, rates + num_machines);
    instance.jobs.resize(static_cast<std::size_t>(num_jobs));
    for (int64_t i = 0; i < num_jobs; ++i) {
      instance.jobs[i].work = work[i];
      instance.jobs[i].deadline = deadlines[i];
      instance.jobs[i].id = static_cast<std::int32_t>(i);
    }
    lmax::validate_input_instance(instance);
    *out = new lmax_instance{std::move(instance)};
  });
}

lmax_status lmax_instance_generate(int64_t num_jobs, int64_t num_machines,
                                   int64_t max_work, int64_t max_deadline,
                                   int64_t max_rate, uint64_t seed,
                                   lmax_instance** out) {
  if (!out) return fail(LMAX_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new lmax_instance{lmax::generate_random(
        num_jobs, num_machines, max_work, max_deadline, max_rate, seed)};
  });
}

void lmax_instance_free(lmax_instance* inst) { delete inst; }

int64_t lmax_instance_num_jobs(const lmax_instance* inst) {
  return inst ? inst->impl.num_jobs() : -1;
}

int64_t lmax_instance_num_machines(const lmax_instance* inst) {
  return inst ? inst->impl.num_machines() : -1;
}

int64_t lmax_instance_job_work(const lmax_instance* inst, int64_t job) {
  if (!inst || job < 0 || job >= inst->impl.num_jobs()) return -1;
  return inst->impl.jobs[static_cast<std::size_t>(job)].work;
}

int64_t lmax_instance_job_deadline(const lmax_instance* inst, int64_t job) {
  if (!inst || job < 0 || job >= inst->impl.num_jobs()) return -1;
  return inst->impl.jobs[static_cast<std::size_t>(job)].deadline;
}

int64_t lmax_instance_machine_rate(const lmax_instance* inst, int64_t machine) {
  if (!inst || machine < 0 || machine >= inst->impl.num_machines()) return -1;
  return inst->impl.machines.rates[static_cast<std::size_t>(machine)];
}

lmax_status lmax_instance_format(const lmax_instance* inst, char** out_text) {
  if (!inst || !out_text)
    return fail(LMAX_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const std::string text = lmax::format_instance(inst->impl);
    char* buffer = new char[text.size() + 1];
    std::memcpy(buffer, text.c_str(), text.size() + 1);
    *out_text = buffer;
  });
}

void lmax_text_free(char* text) { delete[] text; }

lmax_status lmax_solve(const lmax_instance* inst, const lmax_options* opts,
                       lmax_solution** out) {
  if (!inst || !out) return fail(LMAX_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = make_solution(lmax::min_lmax(inst->impl, to_limits(opts)));
  });
}

lmax_status lmax_solve_oracle(const lmax_instance* inst,
                              const lmax_options* opts, lmax_solution** out) {
  if (!inst || !out) return fail(LMAX_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = make_solution(lmax::brute_force_min_lmax(inst->impl, to_limits(opts)));
  });
}

lmax_status lmax_check_feasible(const lmax_instance* inst, int64_t bound,
                                const lmax_options* opts, int* out_feasible) {
  if (!inst || !out_feasible)
    return fail(LMAX_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out_feasible =
        lmax::probe(inst->impl, bound, to_limits(opts)).feasible ? 1 : 0;
  });
}

int lmax_solution_has_value(const lmax_solution* sol) {
  return sol && sol->value.has_value() ? 1 : 0;
}

int64_t lmax_solution_value(const lmax_solution* sol) {
  return sol && sol->value ? *sol->value : 0;
}

int64_t lmax_solution_machine_of(const lmax_solution* sol, int64_t job) {
  if (!sol || job < 0 || job >= static_cast<int64_t>(sol->machine_of.size()))
    return -1;
  return sol->machine_of[static_cast<std::size_t>(job)];
}

int64_t lmax_solution_probe_count(const lmax_solution* sol) {
  return sol ? sol->probes : -1;
}

void lmax_solution_free(lmax_solution* sol) { delete sol; }

lmax_status lmax_binpack_parse(const char* text, lmax_binpack** out) {
  if (!text || !out) return fail(LMAX_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new lmax_binpack{lmax::parse_binpack(text)};
  });
}

lmax_status lmax_binpack_create(int64_t bin_capacity, int64_t num_items,
                                const int64_t* sizes, lmax_binpack** out) {
  if (!out || num_items < 0 || (num_items > 0 && !sizes))
    return fail(LMAX_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    lmax::BinPackInstance bp;
    bp.bin_capacity = bin_capacity;
    bp.item_sizes.assign(sizes, sizes + num_items);
    if (bp.bin_capacity < 1) throw lmax::RangeError("bin capacity must be >= 1");
    for (std::int64_t s : bp.item_sizes) {
      if (s < 1) throw lmax::RangeError("item sizes must be >= 1");
      if (s > bp.bin_capacity)
        throw lmax::RangeError("item size exceeds bin capacity");
    }
    *out = new lmax_binpack{std::move(bp)};
  });
}

void lmax_binpack_free(lmax_binpack* bp) { delete bp; }

int64_t lmax_binpack_num_items(const lmax_binpack* bp) {
  return bp ? bp->impl.num_items() : -1;
}

lmax_status lmax_binpack_min_bins(const lmax_binpack* bp,
                                  lmax_binpack_strategy strategy,
                                  const lmax_options* opts,
                                  lmax_packing** out) {
  if (!bp || !out) return fail(LMAX_ERR_INVALID_ARGUMENT, "null argument");
  if (strategy != LMAX_BINPACK_SCAN && strategy != LMAX_BINPACK_BISECT)
    return fail(LMAX_ERR_INVALID_ARGUMENT, "unknown bin-packing strategy");
  return guarded([&] {
    const lmax::PackingResult result = lmax::min_bins(
        bp->impl,
        strategy == LMAX_BINPACK_SCAN ? lmax::BinPackStrategy::kScanAscending
                                      : lmax::BinPackStrategy::kBisect,
        to_limits(opts));
    auto* packing = new lmax_packing;
    packing->bins = result.bins;
    packing->bin_of = result.bin_of;
    *out = packing;
  });
}

int64_t lmax_packing_num_bins(const lmax_packing* packing) {
  return packing ? packing->bins : -1;
}

int64_t lmax_packing_bin_of(const lmax_packing* packing, int64_t item) {
  if (!packing || item < 0 ||
      item >= static_cast<int64_t>(packing->bin_of.size()))
    return -1;
  return packing->bin_of[static_cast<std::size_t>(item)];
}

void lmax_packing_free(lmax_packing* packing) { delete packing; }

}  // extern "C"
