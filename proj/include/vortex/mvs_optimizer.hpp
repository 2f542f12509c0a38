#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "vortex/benchmark_functions.hpp"
#include "vortex/optimizer_result.hpp"
#include "vortex/radius_schedule.hpp"

namespace vortex {

// How the m - 1 free centers move between iterations, given the subset best
// s' of a center and the incumbent s_best, with u ~ U[0, 1) drawn once per
// center:
//   paper:      s' + u * (s' + s_best)   (the published rule, taken literally)
//   difference: s' + u * (s_best - s')   (attraction towards the incumbent)
enum class CenterUpdate { paper, difference };

CenterUpdate parse_center_update(std::string_view text);
std::string_view to_string(CenterUpdate rule);

struct MvsConfig {
  std::size_t center_count = 5;     // m
  std::size_t candidate_count = 50; // n, split evenly: n / m per center
  std::size_t max_iterations = 500000;
  std::uint64_t seed = 0;
  CenterUpdate center_update = CenterUpdate::paper;
  ScheduleOptions schedule;
  std::size_t trajectory_stride = 100;
};

// m copies of the box midpoint, row-major (m x d).
std::vector<double> init_centers(const Bounds& bounds, std::size_t center_count);

// Next centers from this iteration's per-center bests (row-major m x d).
// Centers 0..m-2 follow `rule` with one uniform draw each, in index order;
// the last center is set to the incumbent. Centers are not bound-repaired.
std::vector<double> update_centers(std::span<const double> subset_best,
                                   std::span<const double> incumbent, CenterUpdate rule,
                                   RngStream& rng);

// Same with the m - 1 uniform draws supplied explicitly.
std::vector<double> update_centers(std::span<const double> subset_best,
                                   std::span<const double> incumbent, CenterUpdate rule,
                                   std::span<const double> draws);

// Modified Vortex Search with m parallel centers.
//
// Per iteration: each center receives n / m Gaussian candidates at radius
// r_t; candidates are repaired and evaluated; the first-best of each subset
// forms the per-center best set; its best replaces the incumbent on strict
// improvement; then the centers move via update_centers.
//
// Deviates per iteration: all candidate normals (center by center), repair
// uniforms, objective noise, then the m - 1 center-update uniforms.
OptimizerResult mvs_minimize(const ObjectiveSpec& objective, const MvsConfig& config,
                             const IterationObserver& observer = {});

}  // namespace vortex
