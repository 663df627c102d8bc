/* Copyright 2026 The lmax-sched Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* lmax: exact minimum-maximum-lateness scheduling on identical or uniformly
 * related parallel machines, plus exact bin packing through the scheduling
 * reduction.
 *
 * Every object is an opaque handle created by an lmax_* call and released by
 * its matching *_free. Calls that can fail return an lmax_status; on failure
 * the output handle is left untouched and lmax_last_error() describes what
 * went wrong (per thread, valid until the next failing call on that thread).
 * All functions are safe to call from multiple threads as long as each
 * handle is used by one thread at a time.
 *
 * Instance text format (UTF-8, '#' starts a comment, blank lines ignored):
 *   line 1: m lambda_1 ... lambda_m    machine count and integer rates >= 1
 *   line 2: n                          job count
 *   next n lines: t_i d_i              integer work >= 0, deadline >= 0
 *
 * Bin-packing text format:
 *   line 1: b                          bin capacity >= 1
 *   line 2: n                          item count
 *   next n lines: s_i                  item sizes in [1, b]
 */

#ifndef LMAX_LMAX_H_
#define LMAX_LMAX_H_

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lmax_status {
  LMAX_OK = 0,
  LMAX_ERR_PARSE = 1,            /* malformed input text */
  LMAX_ERR_RANGE = 2,            /* integer overflow or invalid bounds */
  LMAX_ERR_RESOURCE_LIMIT = 3,   /* a configured cap would be exceeded */
  LMAX_ERR_INVALID_ARGUMENT = 4, /* null handle, bad index, precondition */
  LMAX_ERR_INTERNAL = 5          /* library bug; please report */
} lmax_status;

typedef struct lmax_instance lmax_instance; /* machines + jobs */
typedef struct lmax_solution lmax_solution; /* lateness value + assignment */
typedef struct lmax_binpack lmax_binpack;   /* items + bin capacity */
typedef struct lmax_packing lmax_packing;   /* bin count + item map */

/* Resource caps. Pass NULL wherever an lmax_options* is accepted to get the
 * defaults (memory_cap_bits = 2^31, enum_cap = 2*10^7). */
typedef struct lmax_options {
  int64_t memory_cap_bits; /* total dp-table budget in bits */
  int64_t enum_cap;        /* max assignments the oracle may enumerate */
} lmax_options;

void lmax_options_init(lmax_options* opts);

/* Message for the most recent failing call on this thread; never NULL. */
const char* lmax_last_error(void);

/* ---- instances ---- */

/* Parses the instance text format. Error messages carry 1-based
 * line/column positions. */
lmax_status lmax_instance_parse(const char* text, lmax_instance** out);

/* Builds an instance from arrays: `rates` has num_machines entries >= 1,
 * `work` / `deadlines` have num_jobs entries (work >= 0, deadlines >= 0). */
lmax_status lmax_instance_create(int64_t num_machines, const int64_t* rates,
                                 int64_t num_jobs, const int64_t* work,
                                 const int64_t* deadlines, lmax_instance** out);

/* Deterministic test-instance supply: SplitMix64(seed) drives uniform draws,
 * rates in [1, max_rate] first, then work in [1, max_work] and deadline in
 * [0, max_deadline] per job. Same arguments, same instance, everywhere. */
lmax_status lmax_instance_generate(int64_t num_jobs, int64_t num_machines,
                                   int64_t max_work, int64_t max_deadline,
                                   int64_t max_rate, uint64_t seed,
                                   lmax_instance** out);

void lmax_instance_free(lmax_instance* inst);

int64_t lmax_instance_num_jobs(const lmax_instance* inst);
int64_t lmax_instance_num_machines(const lmax_instance* inst);
/* Accessors return -1 when the handle is NULL or the index is out of range. */
int64_t lmax_instance_job_work(const lmax_instance* inst, int64_t job);
int64_t lmax_instance_job_deadline(const lmax_instance* inst, int64_t job);
int64_t lmax_instance_machine_rate(const lmax_instance* inst, int64_t machine);

/* Canonical text form; parsing it reproduces the instance exactly. The
 * returned buffer is released with lmax_text_free. */
lmax_status lmax_instance_format(const lmax_instance* inst, char** out_text);
void lmax_text_free(char* text);

/* ---- solving ---- */

/* Exact minimum of the maximum lateness: bisects the lateness bound over
 * feasibility probes of the layered dp, then reads the value off the witness
 * schedule. */
lmax_status lmax_solve(const lmax_instance* inst, const lmax_options* opts,
                       lmax_solution** out);

/* Same contract, answered by exhaustive assignment enumeration instead of
 * the dp. Exponential; intended for cross-checking small instances. */
lmax_status lmax_solve_oracle(const lmax_instance* inst,
                              const lmax_options* opts, lmax_solution** out);

/* Sets *out_feasible to 1 iff some schedule keeps every job within
 * deadline + bound. */
lmax_status lmax_check_feasible(const lmax_instance* inst, int64_t bound,
                                const lmax_options* opts, int* out_feasible);

/* 0 when the instance had no jobs (then there is no lateness value). */
int lmax_solution_has_value(const lmax_solution* sol);
int64_t lmax_solution_value(const lmax_solution* sol);
/* 0-based machine index for a 0-based job id; -1 on bad input. */
int64_t lmax_solution_machine_of(const lmax_solution* sol, int64_t job);
/* Feasibility probes the search spent (0 for the oracle path). */
int64_t lmax_solution_probe_count(const lmax_solution* sol);
void lmax_solution_free(lmax_solution* sol);

/* ---- bin packing via the scheduling reduction ---- */

typedef enum lmax_binpack_strategy {
  LMAX_BINPACK_SCAN = 0,  /* try m = 1, 2, ... (default; cheap probes first) */
  LMAX_BINPACK_BISECT = 1 /* binary search m in [1, n] */
} lmax_binpack_strategy;

lmax_status lmax_binpack_parse(const char* text, lmax_binpack** out);
lmax_status lmax_binpack_create(int64_t bin_capacity, int64_t num_items,
                                const int64_t* sizes, lmax_binpack** out);
void lmax_binpack_free(lmax_binpack* bp);
int64_t lmax_binpack_num_items(const lmax_binpack* bp);

/* Exact minimum bin count. Items become jobs (work = size, deadline = bin
 * capacity) on m unit-rate machines; the smallest feasible m is the answer
 * and the feasibility witness is the packing. Requires >= 1 item. */
lmax_status lmax_binpack_min_bins(const lmax_binpack* bp,
                                  lmax_binpack_strategy strategy,
                                  const lmax_options* opts,
                                  lmax_packing** out);

int64_t lmax_packing_num_bins(const lmax_packing* packing);
/* 0-based bin index for a 0-based item id; -1 on bad input. */
int64_t lmax_packing_bin_of(const lmax_packing* packing, int64_t item);
void lmax_packing_free(lmax_packing* packing);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* LMAX_LMAX_H_ */
