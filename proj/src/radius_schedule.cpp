#include "vortex/radius_schedule.hpp"

#include <cmath>
#include <string>

#include "vortex/errors.hpp"
#include "vortex/special_functions.hpp"

namespace vortex {

RadiusSchedule::RadiusSchedule(double sigma0, std::size_t max_iterations, ScheduleOptions options)
    : sigma0_(sigma0),
      probability_(options.probability),
      initial_shape_(options.initial_shape),
      max_iterations_(max_iterations) {
  if (!(sigma0_ > 0.0) || !std::isfinite(sigma0_)) {
    throw ConfigError("RadiusSchedule: sigma0 must be finite and > 0");
  }
  if (!(probability_ > 0.0 && probability_ < 1.0)) {
    throw ConfigError("RadiusSchedule: probability level x must lie in (0, 1)");
  }
  if (!(initial_shape_ > 0.0) || !std::isfinite(initial_shape_)) {
    throw ConfigError("RadiusSchedule: initial shape a0 must be finite and > 0");
  }
  if (max_iterations_ < 1) {
    throw ConfigError("RadiusSchedule: max_iterations must be >= 1");
  }
}

double RadiusSchedule::shape_at(std::size_t t) const {
  if (t >= max_iterations_) {
    throw DomainError("RadiusSchedule: iteration " + std::to_string(t) +
                      " outside [0, " + std::to_string(max_iterations_) + ")");
  }
  const double a =
      initial_shape_ - static_cast<double>(t) / static_cast<double>(max_iterations_);
  return a < kMinShape ? kMinShape : a;
}

double RadiusSchedule::radius_at(std::size_t t) const {
  return sigma0_ * schedule_curve(probability_, shape_at(t));
}

double schedule_curve(double probability, double shape) {
  return (1.0 / probability) * inverse_lower_regularized_gamma(probability, shape);
}

}  // namespace vortex
