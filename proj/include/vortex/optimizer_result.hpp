#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace vortex {

struct TrajectoryPoint {
  std::size_t iteration;  // 0-based index of the completed iteration
  double best_fitness;    // incumbent fitness after that iteration

  bool operator==(const TrajectoryPoint&) const = default;
};

struct OptimizerResult {
  std::vector<double> best_position;
  double best_fitness = 0.0;
  std::vector<TrajectoryPoint> trajectory;
  std::uint64_t evaluations = 0;

  bool operator==(const OptimizerResult&) const = default;
};

// State exposed to an observer at the end of every iteration. Spans are only
// valid for the duration of the callback. Centers are row-major, one row of
// `dimension` values per center.
struct IterationSnapshot {
  std::size_t iteration;
  std::size_t dimension;
  double radius;
  std::span<const double> centers;           // centers the iteration sampled around
  std::span<const double> subset_best;       // per-center best fitness this iteration
  std::span<const double> subset_best_positions;
  std::span<const double> incumbent_position;
  double incumbent_fitness;
  std::span<const double> next_centers;      // centers for the following iteration
};

using IterationObserver = std::function<void(const IterationSnapshot&)>;

// Trajectory samples are taken at iteration 0, every `stride` iterations,
// and at the final iteration.
inline bool is_trajectory_sample(std::size_t t, std::size_t stride, std::size_t max_iterations) {
  return t == 0 || t + 1 == max_iterations || (stride > 0 && t % stride == 0);
}

}  // namespace vortex
