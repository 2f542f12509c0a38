#include "vortex/experiment_harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "vortex/errors.hpp"
#include "vortex/significance_stats.hpp"

namespace vortex {
namespace {

std::string function_tag(int id) { return get_function(id).label(); }

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

int function_id_from_json(const nlohmann::json& item) {
  if (item.is_number_integer()) return get_function(item.get<int>()).id;
  if (item.is_string()) return find_function(item.get<std::string>()).id;
  throw ConfigError("plan: function entries must be ids or names");
}

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot open '" + path.string() + "' for writing");
  return out;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

template <typename T>
T parse_number(const std::string& text, const std::filesystem::path& path, std::size_t line_no) {
  T value{};
  const char* begin = text.data();
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    // from_chars rejects "inf"/"nan" spellings on some libraries; strtod does not.
    if constexpr (std::is_floating_point_v<T>) {
      char* stop = nullptr;
      const double v = std::strtod(text.c_str(), &stop);
      if (stop != nullptr && *stop == '\0' && !text.empty()) return static_cast<T>(v);
    }
    throw DataError(path.string() + ":" + std::to_string(line_no) + ": bad number '" + text + "'");
  }
  return value;
}

}  // namespace

std::string AlgorithmSpec::label() const {
  std::string out;
  if (algorithm == Algorithm::vs) {
    out = "vs-n" + std::to_string(candidate_count);
  } else {
    out = "mvs-m" + std::to_string(center_count) + "-n" + std::to_string(candidate_count);
    if (center_update == CenterUpdate::difference) out += "-difference";
  }
  return out;
}

OptimizerResult run_algorithm(const ObjectiveSpec& objective, const AlgorithmSpec& spec,
                              std::size_t max_iterations, std::uint64_t seed,
                              std::size_t trajectory_stride, const IterationObserver& observer) {
  if (spec.algorithm == Algorithm::vs) {
    VsConfig config;
    config.candidate_count = spec.candidate_count;
    config.max_iterations = max_iterations;
    config.seed = seed;
    config.schedule = spec.schedule;
    config.trajectory_stride = trajectory_stride;
    return vs_minimize(objective, config, observer);
  }
  MvsConfig config;
  config.center_count = spec.center_count;
  config.candidate_count = spec.candidate_count;
  config.max_iterations = max_iterations;
  config.seed = seed;
  config.center_update = spec.center_update;
  config.schedule = spec.schedule;
  config.trajectory_stride = trajectory_stride;
  return mvs_minimize(objective, config, observer);
}

ExperimentPlan parse_plan(const nlohmann::json& doc) {
  try {
    ExperimentPlan plan;
    const std::string algo = doc.at("algorithm").get<std::string>();
    if (algo == "vs" || algo == "VS") {
      plan.algorithm.algorithm = Algorithm::vs;
    } else if (algo == "mvs" || algo == "MVS") {
      plan.algorithm.algorithm = Algorithm::mvs;
    } else {
      throw ConfigError("plan: algorithm must be 'vs' or 'mvs', got '" + algo + "'");
    }
    const nlohmann::json params = doc.value("params", nlohmann::json::object());
    plan.algorithm.center_count = params.value("m", plan.algorithm.center_count);
    plan.algorithm.candidate_count = params.value("n", plan.algorithm.candidate_count);
    plan.max_iterations = params.value("max_iterations", plan.max_iterations);
    if (params.contains("center_update")) {
      plan.algorithm.center_update =
          parse_center_update(params.at("center_update").get<std::string>());
    }
    plan.algorithm.schedule.probability =
        params.value("x", plan.algorithm.schedule.probability);
    plan.algorithm.schedule.initial_shape =
        params.value("a0", plan.algorithm.schedule.initial_shape);

    const nlohmann::json& functions = doc.at("functions");
    if (functions.is_string() && functions.get<std::string>() == "all") {
      for (const auto& spec : benchmark_suite()) plan.function_ids.push_back(spec.id);
    } else if (functions.is_array()) {
      for (const auto& item : functions) plan.function_ids.push_back(function_id_from_json(item));
    } else {
      throw ConfigError("plan: 'functions' must be a list or \"all\"");
    }
    if (plan.function_ids.empty()) throw ConfigError("plan: no functions selected");

    plan.runs = doc.value("runs", plan.runs);
    plan.base_seed = doc.value("base_seed", plan.base_seed);
    plan.trajectory_stride = doc.value("stride", plan.trajectory_stride);
    plan.out_dir = doc.value("out_dir", std::string());
    plan.workers = doc.value("workers", plan.workers);
    plan.write_trajectories = doc.value("write_trajectories", plan.write_trajectories);
    plan.record_wall_time = doc.value("record_wall_time", plan.record_wall_time);

    if (plan.runs < 1) throw ConfigError("plan: runs must be >= 1");
    if (plan.max_iterations < 1) throw ConfigError("plan: max_iterations must be >= 1");
    if (plan.algorithm.algorithm == Algorithm::mvs &&
        (plan.algorithm.center_count < 1 ||
         plan.algorithm.candidate_count % plan.algorithm.center_count != 0)) {
      throw ConfigError("plan: n must be a positive multiple of m");
    }
    return plan;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("plan: ") + e.what());
  }
}

ExperimentPlan load_plan(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open plan file '" + path.string() + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw DataError("plan file '" + path.string() + "': " + e.what());
  }
  return parse_plan(doc);
}

nlohmann::json plan_to_json(const ExperimentPlan& plan) {
  nlohmann::json doc;
  doc["algorithm"] = plan.algorithm.algorithm == Algorithm::vs ? "vs" : "mvs";
  nlohmann::json params;
  params["n"] = plan.algorithm.candidate_count;
  if (plan.algorithm.algorithm == Algorithm::mvs) {
    params["m"] = plan.algorithm.center_count;
    params["center_update"] = std::string(to_string(plan.algorithm.center_update));
  }
  params["max_iterations"] = plan.max_iterations;
  params["x"] = plan.algorithm.schedule.probability;
  params["a0"] = plan.algorithm.schedule.initial_shape;
  doc["params"] = params;
  nlohmann::json functions = nlohmann::json::array();
  for (int id : plan.function_ids) functions.push_back(get_function(id).label());
  doc["functions"] = functions;
  doc["runs"] = plan.runs;
  doc["base_seed"] = plan.base_seed;
  doc["stride"] = plan.trajectory_stride;
  doc["out_dir"] = plan.out_dir.string();
  return doc;
}

std::string plan_hash(const ExperimentPlan& plan) {
  nlohmann::json doc = plan_to_json(plan);
  doc.erase("out_dir");
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a(doc.dump())));
  return buf;
}

Summary summarize(std::span<const double> finals) {
  if (finals.empty()) throw ConfigError("summarize: no values");
  std::vector<double> v(finals.size());
  std::transform(finals.begin(), finals.end(), v.begin(), floor_tiny);
  const double n = static_cast<double>(v.size());
  double sum = 0.0;
  for (double x : v) sum += x;
  const double mean = sum / n;
  double ss = 0.0;
  for (double x : v) ss += (x - mean) * (x - mean);
  Summary s;
  s.mean = mean;
  s.stddev = v.size() > 1 ? std::sqrt(ss / (n - 1.0)) : 0.0;
  s.best = *std::min_element(v.begin(), v.end());
  return s;
}

std::size_t resolve_worker_count(std::size_t requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("VORTEX_WORKERS")) {
    const long n = std::strtol(env, nullptr, 10);
    if (n > 0) return static_cast<std::size_t>(n);
  }
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

ExperimentSummary run_experiment(const ExperimentPlan& plan) {
  if (plan.runs < 1) throw ConfigError("run_experiment: runs must be >= 1");
  if (plan.function_ids.empty()) throw ConfigError("run_experiment: no functions");
  for (int id : plan.function_ids) get_function(id);

  ExperimentSummary summary;
  summary.plan_hash = plan_hash(plan);
  const std::size_t total = plan.function_ids.size() * plan.runs;
  summary.runs.resize(total);

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t job = next.fetch_add(1);
      if (job >= total) return;
      const std::size_t f = job / plan.runs;
      const std::size_t r = job % plan.runs;
      try {
        const ObjectiveSpec& objective = get_function(plan.function_ids[f]);
        const std::uint64_t seed = plan.base_seed + r;
        const auto start = std::chrono::steady_clock::now();
        OptimizerResult result =
            run_algorithm(objective, plan.algorithm, plan.max_iterations, seed,
                          plan.trajectory_stride);
        const auto stop = std::chrono::steady_clock::now();
        RunRecord& record = summary.runs[job];
        record.function_id = objective.id;
        record.run = r;
        record.seed = seed;
        record.final_fitness = result.best_fitness;
        record.evaluations = result.evaluations;
        record.wall_ms = plan.record_wall_time
                             ? std::chrono::duration<double, std::milli>(stop - start).count()
                             : 0.0;
        record.trajectory = std::move(result.trajectory);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(total);
      }
    }
  };

  const std::size_t workers = std::min(resolve_worker_count(plan.workers), total);
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t i = 0; i < workers; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  const std::string label = plan.algorithm.label();
  for (std::size_t f = 0; f < plan.function_ids.size(); ++f) {
    FunctionSummary fs;
    fs.function_id = plan.function_ids[f];
    fs.algorithm = label;
    for (std::size_t r = 0; r < plan.runs; ++r) {
      fs.finals.push_back(summary.runs[f * plan.runs + r].final_fitness);
    }
    fs.stats = summarize(fs.finals);
    summary.functions.push_back(std::move(fs));
  }

  if (!plan.out_dir.empty()) {
    std::filesystem::create_directories(plan.out_dir);
    const std::string& hash = summary.plan_hash;
    for (std::size_t f = 0; f < plan.function_ids.size(); ++f) {
      const std::string tag = function_tag(plan.function_ids[f]);
      const std::span<const RunRecord> runs(summary.runs.data() + f * plan.runs, plan.runs);
      write_raw_csv(plan.out_dir / ("raw_" + label + "_" + tag + "_" + hash + ".csv"), label, runs);
      if (plan.write_trajectories) {
        const auto dir = plan.out_dir / "trajectories";
        std::filesystem::create_directories(dir);
        for (const RunRecord& record : runs) {
          char run_tag[16];
          std::snprintf(run_tag, sizeof run_tag, "_run%03zu", record.run);
          write_trajectory_csv(dir / (label + "_" + tag + "_" + hash + run_tag + ".csv"),
                               record.trajectory);
        }
      }
    }
    write_summary_csv(plan.out_dir / ("summary_" + label + "_" + hash + ".csv"),
                      summary.functions);
  }
  return summary;
}

std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc()) return std::to_string(value);
  return std::string(buf, ptr);
}

void write_raw_csv(const std::filesystem::path& path, const std::string& algorithm,
                   std::span<const RunRecord> runs) {
  std::ofstream out = open_for_write(path);
  out << "function,algorithm,run,seed,final_fitness,evaluations,wall_ms\n";
  for (const RunRecord& r : runs) {
    char wall[32];
    std::snprintf(wall, sizeof wall, "%.3f", r.wall_ms);
    out << get_function(r.function_id).label() << ',' << algorithm << ',' << r.run << ','
        << r.seed << ',' << format_double(r.final_fitness) << ',' << r.evaluations << ','
        << wall << '\n';
  }
}

void write_trajectory_csv(const std::filesystem::path& path,
                          std::span<const TrajectoryPoint> trajectory) {
  std::ofstream out = open_for_write(path);
  out << "iteration,best_fitness\n";
  for (const auto& p : trajectory) out << p.iteration << ',' << format_double(p.best_fitness) << '\n';
}

void write_summary_csv(const std::filesystem::path& path,
                       std::span<const FunctionSummary> functions) {
  std::ofstream out = open_for_write(path);
  out << "function,algorithm,mean,stddev,best\n";
  for (const auto& f : functions) {
    out << get_function(f.function_id).label() << ',' << f.algorithm << ','
        << format_double(f.stats.mean) << ',' << format_double(f.stats.stddev) << ','
        << format_double(f.stats.best) << '\n';
  }
}

std::vector<RawRow> read_raw_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open raw results '" + path.string() + "'");
  std::string line;
  if (!std::getline(in, line)) throw DataError(path.string() + ": empty file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "function,algorithm,run,seed,final_fitness,evaluations,wall_ms") {
    throw DataError(path.string() + ": unexpected header '" + line + "'");
  }
  std::vector<RawRow> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto f = split_csv_line(line);
    if (f.size() != 7) {
      throw DataError(path.string() + ":" + std::to_string(line_no) + ": expected 7 fields");
    }
    RawRow row;
    row.function = f[0];
    row.algorithm = f[1];
    row.run = parse_number<std::size_t>(f[2], path, line_no);
    row.seed = parse_number<std::uint64_t>(f[3], path, line_no);
    row.final_fitness = parse_number<double>(f[4], path, line_no);
    row.evaluations = parse_number<std::uint64_t>(f[5], path, line_no);
    row.wall_ms = parse_number<double>(f[6], path, line_no);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace vortex
