#include "vortex/mvs_optimizer.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "vortex/errors.hpp"

namespace vortex {

CenterUpdate parse_center_update(std::string_view text) {
  if (text == "paper") return CenterUpdate::paper;
  if (text == "difference") return CenterUpdate::difference;
  throw ConfigError("center update must be 'paper' or 'difference', got '" + std::string(text) +
                    "'");
}

std::string_view to_string(CenterUpdate rule) {
  return rule == CenterUpdate::paper ? "paper" : "difference";
}

std::vector<double> init_centers(const Bounds& bounds, std::size_t center_count) {
  if (center_count < 1) throw ConfigError("mvs: center_count must be >= 1");
  const std::vector<double> mid = initial_center(bounds);
  std::vector<double> centers;
  centers.reserve(center_count * mid.size());
  for (std::size_t l = 0; l < center_count; ++l) {
    centers.insert(centers.end(), mid.begin(), mid.end());
  }
  return centers;
}

std::vector<double> update_centers(std::span<const double> subset_best,
                                   std::span<const double> incumbent, CenterUpdate rule,
                                   std::span<const double> draws) {
  const std::size_t d = incumbent.size();
  if (d == 0 || subset_best.empty() || subset_best.size() % d != 0) {
    throw ConfigError("update_centers: subset bests must be a non-empty m x d matrix");
  }
  const std::size_t m = subset_best.size() / d;
  if (draws.size() != m - 1) {
    throw ConfigError("update_centers: need m - 1 = " + std::to_string(m - 1) + " draws, got " +
                      std::to_string(draws.size()));
  }
  std::vector<double> next(subset_best.size());
  for (std::size_t l = 0; l + 1 < m; ++l) {
    const double u = draws[l];
    for (std::size_t i = 0; i < d; ++i) {
      const double s = subset_best[l * d + i];
      next[l * d + i] = rule == CenterUpdate::paper ? s + u * (s + incumbent[i])
                                                    : s + u * (incumbent[i] - s);
    }
  }
  std::copy(incumbent.begin(), incumbent.end(), next.begin() + static_cast<std::ptrdiff_t>((m - 1) * d));
  return next;
}

std::vector<double> update_centers(std::span<const double> subset_best,
                                   std::span<const double> incumbent, CenterUpdate rule,
                                   RngStream& rng) {
  const std::size_t d = incumbent.size();
  const std::size_t m = d == 0 ? 0 : subset_best.size() / d;
  std::vector<double> draws(m > 0 ? m - 1 : 0);
  for (double& u : draws) u = rng.uniform();
  return update_centers(subset_best, incumbent, rule, draws);
}

OptimizerResult mvs_minimize(const ObjectiveSpec& objective, const MvsConfig& config,
                             const IterationObserver& observer) {
  const std::size_t m = config.center_count;
  const std::size_t n = config.candidate_count;
  if (m < 1) throw ConfigError("mvs: center_count m must be >= 1");
  if (n < 1) throw ConfigError("mvs: candidate_count n must be >= 1");
  if (n % m != 0) {
    throw ConfigError("mvs: candidate_count n=" + std::to_string(n) +
                      " is not divisible by center_count m=" + std::to_string(m));
  }
  if (config.max_iterations < 1) throw ConfigError("mvs: max_iterations must be >= 1");
  if (!objective.evaluator) throw ConfigError("mvs: objective has no evaluator");

  const Bounds& bounds = objective.bounds;
  const std::size_t d = bounds.dimension();
  const std::size_t per_center = n / m;
  const RadiusSchedule schedule(initial_sigma(bounds), config.max_iterations, config.schedule);
  RngStream rng(config.seed);

  std::vector<double> centers = init_centers(bounds, m);
  std::vector<double> candidates(n * d);
  std::vector<double> fitness(n);
  std::vector<double> subset_best_positions(m * d);
  std::vector<double> subset_best_fitness(m);

  OptimizerResult result;
  result.best_position = initial_center(bounds);
  result.best_fitness = std::numeric_limits<double>::infinity();

  for (std::size_t t = 0; t < config.max_iterations; ++t) {
    const double radius = schedule.radius_at(t);
    for (std::size_t l = 0; l < m; ++l) {
      sample_into(std::span<double>(candidates).subspan(l * per_center * d, per_center * d),
                  std::span<const double>(centers).subspan(l * d, d), radius, rng);
    }
    for (std::size_t k = 0; k < n; ++k) {
      repair_in_place(std::span<double>(candidates).subspan(k * d, d), bounds, rng);
    }
    for (std::size_t k = 0; k < n; ++k) {
      fitness[k] = objective.evaluator(std::span<const double>(candidates).subspan(k * d, d), &rng);
    }
    result.evaluations += n;

    std::size_t iteration_best = 0;
    for (std::size_t l = 0; l < m; ++l) {
      std::size_t best = l * per_center;
      for (std::size_t k = best + 1; k < (l + 1) * per_center; ++k) {
        if (fitness[k] < fitness[best]) best = k;
      }
      subset_best_fitness[l] = fitness[best];
      std::copy_n(candidates.begin() + static_cast<std::ptrdiff_t>(best * d), d,
                  subset_best_positions.begin() + static_cast<std::ptrdiff_t>(l * d));
      if (subset_best_fitness[l] < subset_best_fitness[iteration_best]) iteration_best = l;
    }

    if (subset_best_fitness[iteration_best] < result.best_fitness) {
      result.best_fitness = subset_best_fitness[iteration_best];
      std::copy_n(subset_best_positions.begin() + static_cast<std::ptrdiff_t>(iteration_best * d),
                  d, result.best_position.begin());
    }

    std::vector<double> next =
        update_centers(subset_best_positions, result.best_position, config.center_update, rng);
    if (observer) {
      observer(IterationSnapshot{t, d, radius, centers, subset_best_fitness,
                                 subset_best_positions, result.best_position, result.best_fitness,
                                 next});
    }
    centers = std::move(next);

    if (is_trajectory_sample(t, config.trajectory_stride, config.max_iterations)) {
      result.trajectory.push_back({t, result.best_fitness});
    }
  }
  return result;
}

}  // namespace vortex
