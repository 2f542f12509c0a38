#include "vortex/vs_optimizer.hpp"

#include <limits>
#include <vector>

#include "vortex/errors.hpp"

namespace vortex {

OptimizerResult vs_minimize(const ObjectiveSpec& objective, const VsConfig& config,
                            const IterationObserver& observer) {
  if (config.candidate_count < 1) throw ConfigError("vs: candidate_count must be >= 1");
  if (config.max_iterations < 1) throw ConfigError("vs: max_iterations must be >= 1");
  if (!objective.evaluator) throw ConfigError("vs: objective has no evaluator");

  const Bounds& bounds = objective.bounds;
  const std::size_t d = bounds.dimension();
  const std::size_t n = config.candidate_count;
  const RadiusSchedule schedule(initial_sigma(bounds), config.max_iterations, config.schedule);
  RngStream rng(config.seed);

  std::vector<double> center = initial_center(bounds);
  std::vector<double> candidates(n * d);
  std::vector<double> fitness(n);

  OptimizerResult result;
  result.best_position = center;
  result.best_fitness = std::numeric_limits<double>::infinity();

  for (std::size_t t = 0; t < config.max_iterations; ++t) {
    const double radius = schedule.radius_at(t);
    sample_into(candidates, center, radius, rng);
    for (std::size_t k = 0; k < n; ++k) {
      repair_in_place(std::span<double>(candidates).subspan(k * d, d), bounds, rng);
    }
    std::size_t best = 0;
    for (std::size_t k = 0; k < n; ++k) {
      fitness[k] = objective.evaluator(std::span<const double>(candidates).subspan(k * d, d), &rng);
      if (fitness[k] < fitness[best]) best = k;
    }
    result.evaluations += n;

    if (fitness[best] < result.best_fitness) {
      result.best_fitness = fitness[best];
      std::copy_n(candidates.begin() + static_cast<std::ptrdiff_t>(best * d), d,
                  result.best_position.begin());
    }

    if (observer) {
      const std::vector<double> sampled_center = center;
      center = result.best_position;
      const double subset_best[1] = {fitness[best]};
      observer(IterationSnapshot{t, d, radius, sampled_center, subset_best,
                                 std::span<const double>(candidates).subspan(best * d, d),
                                 result.best_position, result.best_fitness, center});
    } else {
      center = result.best_position;
    }

    if (is_trajectory_sample(t, config.trajectory_stride, config.max_iterations)) {
      result.trajectory.push_back({t, result.best_fitness});
    }
  }
  return result;
}

}  // namespace vortex
