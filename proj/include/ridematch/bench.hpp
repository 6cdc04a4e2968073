#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "ridematch/metrics.hpp"

namespace ridematch {

enum class PlanMode { rank, match, verify, bench, scenario };

std::string_view to_string(PlanMode m);
PlanMode plan_mode_from_string(std::string_view s);

// Benchmark sweep description. The sub-seed of every (size, trial) cell is
// derived from (seed, size index, trial index), so cells are reproducible
// independently of execution order.
struct ExperimentPlan {
  PlanMode mode = PlanMode::bench;
  std::vector<std::pair<int, int>> sizes;  // (n_drivers, n_passengers)
  int trials = 30;
  std::vector<std::string> algorithms = {"sm"};
  std::uint64_t seed = 0;
  std::string output_dir;
  // Cross-check every matching against the exhaustive stable-set oracle;
  // only allowed for sizes up to 6 (factorial guard).
  bool oracle_check = false;

  // Throws InvalidInputError for empty sizes, trials < 1, unknown algorithm
  // names, or gs planned on an unequal size (the baseline refuses those);
  // ResourceGuardError when oracle_check is combined with a side above 6.
  void validate() const;
};

ExperimentPlan plan_from_json(const std::string& text);
std::string to_json(const ExperimentPlan& plan);

struct BenchRow {
  std::string instance_id;
  std::string algorithm;
  int n_drivers = 0;
  int n_passengers = 0;
  int size_index = 0;
  int trial = 0;
  MetricReport report;
};

// Generates a population per cell, derives the matching instance, runs every
// planned algorithm, and evaluates all metrics (objective and delta come
// from the derived value matrix). Every matching is verified before its row
// is recorded. Pure function of (plan.sizes, plan.trials, plan.algorithms,
// plan.seed).
std::vector<BenchRow> run_bench(const ExperimentPlan& plan);

// results.csv (one row per instance x algorithm) plus per-figure aggregate
// files fig_<metric>.csv with mean and stdev per size, suitable for any
// external plotting tool.
void write_bench_outputs(const ExperimentPlan& plan,
                         const std::vector<BenchRow>& rows,
                         const std::filesystem::path& directory);

}  // namespace ridematch
