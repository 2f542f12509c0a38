#pragma once

#include <cstdint>

#include "vortex/benchmark_functions.hpp"
#include "vortex/optimizer_result.hpp"
#include "vortex/radius_schedule.hpp"

namespace vortex {

struct VsConfig {
  std::size_t candidate_count = 50;
  std::size_t max_iterations = 500000;
  std::uint64_t seed = 0;
  ScheduleOptions schedule;
  std::size_t trajectory_stride = 100;
};

// Single-center Vortex Search.
//
// Per iteration t: draw candidate_count Gaussian candidates around the center
// with standard deviation r_t, repair out-of-box coordinates, evaluate, and
// take the first-best candidate. The incumbent is replaced only on strict
// improvement, and the next center is always the incumbent.
//
// Random deviates are consumed per iteration in a fixed order: all candidate
// normals, then repair uniforms, then objective noise (Quartic only).
OptimizerResult vs_minimize(const ObjectiveSpec& objective, const VsConfig& config,
                            const IterationObserver& observer = {});

}  // namespace vortex
