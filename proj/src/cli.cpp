#include "vortex/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <map>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "vortex/errors.hpp"
#include "vortex/experiment_harness.hpp"
#include "vortex/significance_stats.hpp"

namespace vortex {
namespace {

struct RunFlags {
  std::string function;
  std::string algo = "mvs";
  std::size_t m = 5;
  std::size_t n = 50;
  std::size_t iterations = 500000;
  std::uint64_t seed = 0;
  std::string center_update = "paper";
  std::size_t stride = 100;
  std::string out;
};

void add_run_flags(CLI::App& cmd, RunFlags& f) {
  cmd.add_option("--function,-f", f.function, "Function id (F3) or name (sphere)")->required();
  cmd.add_option("--algo,-a", f.algo, "Algorithm")
      ->check(CLI::IsMember({"vs", "mvs"}))
      ->capture_default_str();
  cmd.add_option("--m", f.m, "Number of centers (mvs)")->capture_default_str();
  cmd.add_option("--n", f.n, "Candidates per iteration")->capture_default_str();
  cmd.add_option("--iters", f.iterations, "Iteration budget")->capture_default_str();
  cmd.add_option("--seed", f.seed, "RNG seed")->capture_default_str();
  cmd.add_option("--center-update", f.center_update, "MVS center rule")
      ->check(CLI::IsMember({"paper", "difference"}))
      ->capture_default_str();
}

AlgorithmSpec algorithm_from(const RunFlags& f) {
  AlgorithmSpec spec;
  spec.algorithm = f.algo == "vs" ? Algorithm::vs : Algorithm::mvs;
  spec.candidate_count = f.n;
  spec.center_count = spec.algorithm == Algorithm::vs ? 1 : f.m;
  spec.center_update = parse_center_update(f.center_update);
  if (spec.candidate_count < 1) throw ConfigError("--n must be >= 1");
  if (f.iterations < 1) throw ConfigError("--iters must be >= 1");
  if (spec.algorithm == Algorithm::mvs) {
    if (spec.center_count < 1) throw ConfigError("--m must be >= 1");
    if (spec.candidate_count % spec.center_count != 0) {
      throw ConfigError("--n (" + std::to_string(f.n) + ") is not divisible by --m (" +
                        std::to_string(f.m) + ")");
    }
  }
  return spec;
}

int cmd_run(const RunFlags& f, std::ostream& out) {
  const ObjectiveSpec& objective = find_function(f.function);
  const AlgorithmSpec spec = algorithm_from(f);
  const auto start = std::chrono::steady_clock::now();
  const OptimizerResult result = run_algorithm(objective, spec, f.iterations, f.seed, f.stride);
  const auto stop = std::chrono::steady_clock::now();

  nlohmann::json doc;
  doc["function"] = objective.label();
  doc["algorithm"] = spec.label();
  doc["best_fitness"] = result.best_fitness;
  doc["best_position"] = result.best_position;
  doc["evaluations"] = result.evaluations;
  doc["wall_ms"] = std::chrono::duration<double, std::milli>(stop - start).count();
  out << doc.dump() << '\n';
  if (!f.out.empty()) write_trajectory_csv(f.out, result.trajectory);
  return 0;
}

int cmd_trace(const RunFlags& f, std::ostream& out) {
  const ObjectiveSpec& objective = find_function(f.function);
  const AlgorithmSpec spec = algorithm_from(f);
  const std::size_t m = spec.algorithm == Algorithm::vs ? 1 : spec.center_count;

  std::ofstream file;
  if (!f.out.empty()) {
    file.open(f.out, std::ios::binary | std::ios::trunc);
    if (!file) throw DataError("cannot open '" + f.out + "' for writing");
  }
  std::ostream& sink = f.out.empty() ? out : file;

  sink << "iteration,radius,best_fitness";
  for (std::size_t c = 1; c <= m; ++c) sink << ",center_" << c << "_best";
  sink << '\n';
  const std::size_t stride = f.stride;
  const std::size_t iterations = f.iterations;
  run_algorithm(objective, spec, iterations, f.seed, iterations,
                [&](const IterationSnapshot& s) {
                  if (!is_trajectory_sample(s.iteration, stride, iterations)) return;
                  sink << s.iteration << ',' << format_double(s.radius) << ','
                       << format_double(s.incumbent_fitness);
                  for (double v : s.subset_best) sink << ',' << format_double(v);
                  sink << '\n';
                });
  return 0;
}

int cmd_campaign(const std::string& plan_path, std::size_t workers, const std::string& out_dir,
                 std::ostream& out) {
  ExperimentPlan plan = load_plan(plan_path);
  if (workers > 0) plan.workers = workers;
  if (!out_dir.empty()) plan.out_dir = out_dir;
  const ExperimentSummary summary = run_experiment(plan);

  out << "function,algorithm,mean,stddev,best\n";
  for (const auto& fs : summary.functions) {
    out << get_function(fs.function_id).label() << ',' << fs.algorithm << ','
        << format_double(fs.stats.mean) << ',' << format_double(fs.stats.stddev) << ','
        << format_double(fs.stats.best) << '\n';
  }
  out << "# plan " << summary.plan_hash << '\n';
  return 0;
}

std::map<std::string, std::map<std::size_t, double>> load_grid(
    const std::vector<std::string>& paths) {
  std::map<std::string, std::map<std::size_t, double>> grid;
  for (const auto& path : paths) {
    for (const RawRow& row : read_raw_csv(path)) {
      if (!grid[row.function].emplace(row.run, row.final_fitness).second) {
        throw DataError(path + ": duplicate run " + std::to_string(row.run) + " for " +
                        row.function);
      }
    }
  }
  return grid;
}

int function_order(const std::string& label) {
  try {
    return find_function(label).id;
  } catch (const LookupError&) {
    return 1 << 30;
  }
}

int cmd_compare(const std::vector<std::string>& a_paths, const std::vector<std::string>& b_paths,
                double alpha, bool continuity, const std::string& out_path, std::ostream& out) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw ConfigError("--alpha must lie in (0, 1)");
  const auto grid_a = load_grid(a_paths);
  const auto grid_b = load_grid(b_paths);

  std::vector<std::string> functions;
  for (const auto& [function, runs] : grid_a) {
    const auto it = grid_b.find(function);
    if (it == grid_b.end()) throw DataError("grid mismatch: " + function + " missing from B");
    if (runs.size() != it->second.size() ||
        !std::equal(runs.begin(), runs.end(), it->second.begin(),
                    [](const auto& x, const auto& y) { return x.first == y.first; })) {
      throw DataError("grid mismatch: runs of " + function + " differ between A and B");
    }
    functions.push_back(function);
  }
  for (const auto& [function, runs] : grid_b) {
    if (!grid_a.contains(function)) throw DataError("grid mismatch: " + function + " missing from A");
  }
  if (functions.empty()) throw DataError("no results to compare");
  std::stable_sort(functions.begin(), functions.end(), [](const auto& x, const auto& y) {
    return function_order(x) < function_order(y);
  });

  WilcoxonOptions options;
  options.alpha = alpha;
  options.continuity_correction = continuity;

  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path, std::ios::binary | std::ios::trunc);
    if (!file) throw DataError("cannot open '" + out_path + "' for writing");
  }
  std::ostream& sink = out_path.empty() ? out : file;

  std::map<std::string, WilcoxonResult> results;
  sink << "function,p_value,t_plus,t_minus,verdict\n";
  for (const auto& function : functions) {
    std::vector<double> a;
    std::vector<double> b;
    for (const auto& [run, v] : grid_a.at(function)) a.push_back(v);
    for (const auto& [run, v] : grid_b.at(function)) b.push_back(v);
    const WilcoxonResult r = wilcoxon_signed_rank(a, b, options);
    char p[32];
    std::snprintf(p, sizeof p, "%.6g", r.p_value);
    sink << function << ',' << p << ',' << format_double(r.t_plus) << ','
         << format_double(r.t_minus) << ',' << verdict_symbol(r.verdict) << '\n';
    results.emplace(function, r);
  }
  sink << "# +/=/- " << verdict_counts(results).str() << '\n';
  return 0;
}

}  // namespace

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Vortex Search optimizers and benchmark harness", "vortex"};
  app.require_subcommand(1);

  RunFlags run_flags;
  auto* run = app.add_subcommand("run", "Run one optimization and print a JSON result");
  add_run_flags(*run, run_flags);
  run->add_option("--stride", run_flags.stride, "Trajectory sampling stride")
      ->capture_default_str();
  run->add_option("--out,-o", run_flags.out, "Write the trajectory CSV here");

  RunFlags trace_flags;
  trace_flags.iterations = 1000;
  trace_flags.stride = 1;
  auto* trace = app.add_subcommand("trace", "Emit a per-iteration convergence CSV");
  add_run_flags(*trace, trace_flags);
  trace->add_option("--stride", trace_flags.stride, "Emit every k-th iteration")
      ->capture_default_str();
  trace->add_option("--out,-o", trace_flags.out, "Write the CSV here instead of stdout");

  std::string plan_path;
  std::size_t workers = 0;
  std::string campaign_out;
  auto* campaign = app.add_subcommand("campaign", "Execute a JSON experiment plan");
  campaign->add_option("--plan,-p", plan_path, "Plan file")->required();
  campaign->add_option("--workers,-w", workers, "Worker threads (0: $VORTEX_WORKERS or all cores)");
  campaign->add_option("--out-dir", campaign_out, "Override the plan's out_dir");

  std::vector<std::string> a_paths;
  std::vector<std::string> b_paths;
  double alpha = 0.05;
  bool continuity = false;
  std::string compare_out;
  auto* compare = app.add_subcommand("compare", "Wilcoxon signed-rank comparison of A against B");
  compare->add_option("--a", a_paths, "Raw results CSV files of algorithm A")->required();
  compare->add_option("--b", b_paths, "Raw results CSV files of algorithm B")->required();
  compare->add_option("--alpha", alpha, "Significance level")->capture_default_str();
  compare->add_flag("--continuity-correction", continuity,
                    "Apply a 0.5 continuity correction in the normal approximation");
  compare->add_option("--out,-o", compare_out, "Write the report here instead of stdout");

  auto* list = app.add_subcommand("list-functions", "Print the benchmark registry as JSON");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, err, err);
  }

  try {
    if (run->parsed()) return cmd_run(run_flags, out);
    if (trace->parsed()) return cmd_trace(trace_flags, out);
    if (campaign->parsed()) return cmd_campaign(plan_path, workers, campaign_out, out);
    if (compare->parsed()) return cmd_compare(a_paths, b_paths, alpha, continuity, compare_out, out);
    if (list->parsed()) {
      out << registry_json().dump(2) << '\n';
      return 0;
    }
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const LookupError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace vortex
