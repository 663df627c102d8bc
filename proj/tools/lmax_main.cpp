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

// Command-line front end. Talks to the solver exclusively through the public
// C API in lmax/lmax.h.
//
// Exit codes: 0 success (and "feasible"), 1 infeasible, 2 parse error,
// 3 resource limit exceeded, 4 invalid flags or arguments, 5 internal error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "lmax/lmax.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitParse = 2;
constexpr int kExitResource = 3;
constexpr int kExitUsage = 4;
constexpr int kExitInternal = 5;

int exit_code_for(lmax_status status) {
  switch (status) {
    case LMAX_OK:
      return kExitOk;
    case LMAX_ERR_PARSE:
      return kExitParse;
    case LMAX_ERR_RESOURCE_LIMIT:
      return kExitResource;
    case LMAX_ERR_RANGE:
    case LMAX_ERR_INVALID_ARGUMENT:
      return kExitUsage;
    case LMAX_ERR_INTERNAL:
    default:
      return kExitInternal;
  }
}

int report_error(const std::string& path, lmax_status status) {
  std::cerr << "error: " << path << ": " << lmax_last_error() << "\n";
  return exit_code_for(status);
}

// Reads the whole input ("-" means standard input). Returns false and sets
// the exit code when the file cannot be read.
bool read_input(const std::string& path, std::string& out, int& exit_code) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    out = buffer.str();
    return true;
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    std::cerr << "error: " << path << ": cannot open file\n";
    exit_code = kExitParse;
    return false;
  }
  std::ostringstream buffer;
  buffer << file.rdbuf();
  out = buffer.str();
  return true;
}

using InstancePtr = std::unique_ptr<lmax_instance, decltype(&lmax_instance_free)>;
using SolutionPtr = std::unique_ptr<lmax_solution, decltype(&lmax_solution_free)>;
using BinPackPtr = std::unique_ptr<lmax_binpack, decltype(&lmax_binpack_free)>;
using PackingPtr = std::unique_ptr<lmax_packing, decltype(&lmax_packing_free)>;

int load_instance(const std::string& path, InstancePtr& inst) {
  std::string text;
  int exit_code = kExitOk;
  if (!read_input(path, text, exit_code)) return exit_code;
  lmax_instance* raw = nullptr;
  const lmax_status status = lmax_instance_parse(text.c_str(), &raw);
  if (status != LMAX_OK) return report_error(path, status);
  inst.reset(raw);
  return kExitOk;
}

void print_solution(const lmax_instance* inst, const lmax_solution* sol) {
  if (lmax_solution_has_value(sol))
    std::cout << "lmax: " << lmax_solution_value(sol) << "\n";
  else
    std::cout << "lmax: none\n";
  const int64_t n = lmax_instance_num_jobs(inst);
  for (int64_t i = 0; i < n; ++i)
    std::cout << "job " << i << " -> machine "
              << lmax_solution_machine_of(sol, i) + 1 << "\n";
}

int run_solve(const std::string& path, const lmax_options& opts, bool oracle) {
  InstancePtr inst(nullptr, lmax_instance_free);
  if (int rc = load_instance(path, inst); rc != kExitOk) return rc;
  lmax_solution* raw = nullptr;
  const lmax_status status = oracle
                                 ? lmax_solve_oracle(inst.get(), &opts, &raw)
                                 : lmax_solve(inst.get(), &opts, &raw);
  if (status != LMAX_OK) return report_error(path, status);
  SolutionPtr sol(raw, lmax_solution_free);
  print_solution(inst.get(), sol.get());
  return kExitOk;
}

int run_feasible(const std::string& path, const lmax_options& opts,
                 int64_t bound) {
  InstancePtr inst(nullptr, lmax_instance_free);
  if (int rc = load_instance(path, inst); rc != kExitOk) return rc;
  int feasible = 0;
  const lmax_status status =
      lmax_check_feasible(inst.get(), bound, &opts, &feasible);
  if (status != LMAX_OK) return report_error(path, status);
  std::cout << "feasible: " << (feasible ? "true" : "false") << "\n";
  return feasible ? kExitOk : kExitInfeasible;
}

int run_binpack(const std::string& path, const lmax_options& opts,
                const std::string& strategy) {
  std::string text;
  int exit_code = kExitOk;
  if (!read_input(path, text, exit_code)) return exit_code;
  lmax_binpack* raw_bp = nullptr;
  lmax_status status = lmax_binpack_parse(text.c_str(), &raw_bp);
  if (status != LMAX_OK) return report_error(path, status);
  BinPackPtr bp(raw_bp, lmax_binpack_free);

  const int64_t n = lmax_binpack_num_items(bp.get());
  if (n == 0) {
    // Zero items pack into zero bins; the solver itself requires >= 1 item.
    std::cout << "bins: 0\n";
    return kExitOk;
  }

  lmax_packing* raw_packing = nullptr;
  status = lmax_binpack_min_bins(bp.get(),
                                 strategy == "bisect" ? LMAX_BINPACK_BISECT
                                                      : LMAX_BINPACK_SCAN,
                                 &opts, &raw_packing);
  if (status != LMAX_OK) return report_error(path, status);
  PackingPtr packing(raw_packing, lmax_packing_free);

  std::cout << "bins: " << lmax_packing_num_bins(packing.get()) << "\n";
  for (int64_t i = 0; i < n; ++i)
    std::cout << "item " << i << " -> bin "
              << lmax_packing_bin_of(packing.get(), i) + 1 << "\n";
  return kExitOk;
}

int run_gen(int64_t n, int64_t m, int64_t max_work, int64_t max_deadline,
            int64_t max_rate, std::uint64_t seed) {
  lmax_instance* raw = nullptr;
  lmax_status status =
      lmax_instance_generate(n, m, max_work, max_deadline, max_rate, seed, &raw);
  if (status != LMAX_OK) return report_error("gen", status);
  InstancePtr inst(raw, lmax_instance_free);
  char* text = nullptr;
  status = lmax_instance_format(inst.get(), &text);
  if (status != LMAX_OK) return report_error("gen", status);
  std::cout << text;
  lmax_text_free(text);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact minimum-maximum-lateness scheduling on identical or uniformly "
      "related parallel machines, and exact bin packing via the scheduling "
      "reduction."};
  app.require_subcommand(1);

  lmax_options opts;
  lmax_options_init(&opts);

  std::string path = "-";
  int64_t bound = 0;
  std::string strategy = "scan";

  int64_t gen_n = 10;
  int64_t gen_m = 2;
  int64_t gen_max_work = 10;
  int64_t gen_max_deadline = 20;
  int64_t gen_max_rate = 1;
  std::uint64_t gen_seed = 1;

  const auto add_caps = [&](CLI::App* cmd) {
    cmd->add_option("--memory-cap-bits", opts.memory_cap_bits,
                    "Total dp-table budget in bits")
        ->capture_default_str();
    cmd->add_option("--enum-cap", opts.enum_cap,
                    "Assignment budget for the oracle")
        ->capture_default_str();
  };
  const auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", path, "Input file, or '-' for standard input")
        ->capture_default_str();
  };

  CLI::App* solve = app.add_subcommand(
      "solve", "Minimize the maximum lateness and print a schedule");
  add_input(solve);
  add_caps(solve);

  CLI::App* feasible = app.add_subcommand(
      "feasible", "Decide whether some schedule keeps lateness <= bound");
  add_input(feasible);
  add_caps(feasible);
  feasible->add_option("--lmax", bound, "Lateness bound to test")->required();

  CLI::App* oracle = app.add_subcommand(
      "oracle", "Solve by exhaustive enumeration (small instances only)");
  add_input(oracle);
  add_caps(oracle);

  CLI::App* binpack = app.add_subcommand(
      "binpack", "Pack items into the fewest bins via the scheduling solver");
  add_input(binpack);
  add_caps(binpack);
  binpack->add_option("--strategy", strategy, "Probe order for the bin count")
      ->check(CLI::IsMember({"scan", "bisect"}))
      ->capture_default_str();

  CLI::App* gen = app.add_subcommand(
      "gen", "Print a reproducible random instance in the text format");
  add_caps(gen);  // accepted everywhere; gen has no table to cap
  gen->add_option("--n", gen_n, "Job count")->capture_default_str();
  gen->add_option("--m", gen_m, "Machine count")->capture_default_str();
  gen->add_option("--max-work", gen_max_work, "Work drawn from [1, max]")
      ->capture_default_str();
  gen->add_option("--max-deadline", gen_max_deadline,
                  "Deadlines drawn from [0, max]")
      ->capture_default_str();
  gen->add_option("--max-rate", gen_max_rate, "Rates drawn from [1, max]")
      ->capture_default_str();
  gen->add_option("--seed", gen_seed, "Generator seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (solve->parsed()) return run_solve(path, opts, /*oracle=*/false);
  if (oracle->parsed()) return run_solve(path, opts, /*oracle=*/true);
  if (feasible->parsed()) return run_feasible(path, opts, bound);
  if (binpack->parsed()) return run_binpack(path, opts, strategy);
  if (gen->parsed())
    return run_gen(gen_n, gen_m, gen_max_work, gen_max_deadline, gen_max_rate,
                   gen_seed);
  return kExitUsage;
}
