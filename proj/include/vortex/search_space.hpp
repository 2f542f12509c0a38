#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include <boost/random/normal_distribution.hpp>

namespace vortex {

// Axis-aligned search box. Every dimension satisfies lower[i] < upper[i].
class Bounds {
 public:
  Bounds(std::vector<double> lower, std::vector<double> upper);

  // Same interval [lower, upper] in every one of `dimension` coordinates.
  static Bounds uniform(double lower, double upper, std::size_t dimension);

  std::size_t dimension() const { return lower_.size(); }
  std::span<const double> lower() const { return lower_; }
  std::span<const double> upper() const { return upper_; }

  bool contains(std::span<const double> position) const;

  bool operator==(const Bounds&) const = default;

 private:
  std::vector<double> lower_;
  std::vector<double> upper_;
};

struct Candidate {
  std::vector<double> position;
  std::optional<double> fitness;
};

// Seeded pseudo-random stream. One stream per optimizer run; not thread-safe.
//
// Deviates come from a 64-bit Mersenne Twister. Uniforms use a fixed bit
// transform and normals use the Boost ziggurat sampler, so a seed yields the
// same sequence on every standard library implementation.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed);

  std::uint64_t seed() const { return seed_; }

  // Uniform on [0, 1) with 53 random bits.
  double uniform();

  // Standard normal.
  double normal() { return normal_(engine_); }

 private:
  std::mt19937_64 engine_;
  std::uint64_t seed_;
  boost::random::normal_distribution<double> normal_;
};

// (upper + lower) / 2 componentwise.
std::vector<double> initial_center(const Bounds& bounds);

// (max(upper) - min(lower)) / 2, a single scalar over all dimensions.
double initial_sigma(const Bounds& bounds);

// `count` unevaluated candidates, each center + sigma * z with z ~ N(0, I).
// sigma may be 0 (all candidates equal the center); negative sigma throws.
// Deviates are consumed candidate by candidate, coordinate by coordinate.
std::vector<Candidate> sample_candidates(std::span<const double> center, double sigma,
                                         std::size_t count, RngStream& rng);

// In-place form used by the optimizers: fills `out` (a multiple of
// center.size() long) with consecutive candidates.
void sample_into(std::span<double> out, std::span<const double> center, double sigma,
                 RngStream& rng);

// Every out-of-box coordinate is replaced by a fresh uniform draw over its
// whole interval; in-box coordinates (closed interval) are left untouched.
Candidate repair_bounds(Candidate candidate, const Bounds& bounds, RngStream& rng);

void repair_in_place(std::span<double> position, const Bounds& bounds, RngStream& rng);

}  // namespace vortex
