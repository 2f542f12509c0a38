#pragma once

#include <cstddef>

namespace vortex {

// Optional overrides of the schedule's probability level and initial shape.
struct ScheduleOptions {
  double probability = 0.1;   // x
  double initial_shape = 1.0; // a0
};

// Shrinking Gaussian radius
//
//   a_t = max(a0 - t / max_iterations, kMinShape)
//   r_t = sigma0 * (1 / x) * P^-1(x, a_t)
//
// where P^-1 inverts the lower regularized incomplete gamma function in its
// integration limit. With x = 0.1 and a0 = 1, r_0 = sigma0 * 10 * -ln(0.9),
// about 1.054 * sigma0, and r_t decays towards 0 as a_t -> 0.
class RadiusSchedule {
 public:
  static constexpr double kMinShape = 1e-12;

  RadiusSchedule(double sigma0, std::size_t max_iterations, ScheduleOptions options = {});

  double sigma0() const { return sigma0_; }
  double probability() const { return probability_; }
  double initial_shape() const { return initial_shape_; }
  std::size_t max_iterations() const { return max_iterations_; }

  // Throws DomainError for t >= max_iterations.
  double shape_at(std::size_t t) const;
  double radius_at(std::size_t t) const;

 private:
  double sigma0_;
  double probability_;
  double initial_shape_;
  std::size_t max_iterations_;
};

// The unscaled schedule curve (1 / x) * P^-1(x, a).
double schedule_curve(double probability, double shape);

}  // namespace vortex
