#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"
#include "vortex/mvs_optimizer.hpp"
#include "vortex/optimizer_result.hpp"
#include "vortex/vs_optimizer.hpp"

namespace vortex {

enum class Algorithm { vs, mvs };

struct AlgorithmSpec {
  Algorithm algorithm = Algorithm::mvs;
  std::size_t center_count = 5;      // m, MVS only
  std::size_t candidate_count = 50;  // n
  CenterUpdate center_update = CenterUpdate::paper;
  ScheduleOptions schedule;

  // Short identifier used in file names and CSV rows, e.g. "vs-n50",
  // "mvs-m5-n250", "mvs-m5-n50-difference".
  std::string label() const;
};

// Runs one optimization of `objective` under `spec`.
OptimizerResult run_algorithm(const ObjectiveSpec& objective, const AlgorithmSpec& spec,
                              std::size_t max_iterations, std::uint64_t seed,
                              std::size_t trajectory_stride = 100,
                              const IterationObserver& observer = {});

struct ExperimentPlan {
  AlgorithmSpec algorithm;
  std::vector<int> function_ids;
  std::size_t runs = 30;
  std::uint64_t base_seed = 0;  // run r uses seed base_seed + r
  std::size_t max_iterations = 500000;
  std::size_t trajectory_stride = 100;
  std::filesystem::path out_dir;  // empty: nothing is written
  std::size_t workers = 0;        // 0: $VORTEX_WORKERS, else hardware concurrency
  bool write_trajectories = true;
  bool record_wall_time = true;   // false writes wall_ms = 0 for byte-stable files
};

// Plan file schema:
//   {"algorithm": "vs" | "mvs",
//    "params": {"m": 5, "n": 50, "max_iterations": 500000,
//               "center_update": "paper" | "difference"},
//    "functions": ["F3", "rastrigin", 23, ...] | "all",
//    "runs": 30, "base_seed": 1, "stride": 100, "out_dir": "results",
//    "workers": 0, "write_trajectories": true, "record_wall_time": true}
ExperimentPlan parse_plan(const nlohmann::json& doc);
ExperimentPlan load_plan(const std::filesystem::path& path);
nlohmann::json plan_to_json(const ExperimentPlan& plan);

// 16 hex digits identifying everything that affects results (algorithm,
// parameters, functions, runs, seeds, budget, stride).
std::string plan_hash(const ExperimentPlan& plan);

struct Summary {
  double mean = 0.0;
  double stddev = 0.0;  // sample (n - 1) standard deviation; 0 for one value
  double best = 0.0;

  bool operator==(const Summary&) const = default;
};

// Floors |v| < 1e-16 to 0, then aggregates. Throws ConfigError when empty.
Summary summarize(std::span<const double> finals);

struct RunRecord {
  int function_id = 0;
  std::size_t run = 0;
  std::uint64_t seed = 0;
  double final_fitness = 0.0;
  std::uint64_t evaluations = 0;
  double wall_ms = 0.0;
  std::vector<TrajectoryPoint> trajectory;
};

struct FunctionSummary {
  int function_id = 0;
  std::string algorithm;
  Summary stats;
  std::vector<double> finals;  // raw, unfloored, in run order
};

struct ExperimentSummary {
  std::string plan_hash;
  std::vector<RunRecord> runs;  // function-major, then run index
  std::vector<FunctionSummary> functions;
};

// Executes runs x functions independent optimizations on a worker pool,
// aggregates, and persists under plan.out_dir when set:
//   raw_<label>_F<id>_<hash>.csv
//     function,algorithm,run,seed,final_fitness,evaluations,wall_ms
//   trajectories/<label>_F<id>_<hash>_run<r>.csv   iteration,best_fitness
//   summary_<label>_<hash>.csv   function,algorithm,mean,stddev,best
// Results do not depend on the worker count.
ExperimentSummary run_experiment(const ExperimentPlan& plan);

std::size_t resolve_worker_count(std::size_t requested);

struct RawRow {
  std::string function;
  std::string algorithm;
  std::size_t run = 0;
  std::uint64_t seed = 0;
  double final_fitness = 0.0;
  std::uint64_t evaluations = 0;
  double wall_ms = 0.0;
};

std::vector<RawRow> read_raw_csv(const std::filesystem::path& path);
void write_raw_csv(const std::filesystem::path& path, const std::string& algorithm,
                   std::span<const RunRecord> runs);
void write_trajectory_csv(const std::filesystem::path& path,
                          std::span<const TrajectoryPoint> trajectory);
void write_summary_csv(const std::filesystem::path& path,
                       std::span<const FunctionSummary> functions);

// Shortest round-trip decimal form of a double.
std::string format_double(double value);

}  // namespace vortex
