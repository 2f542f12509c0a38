#include "vortex/search_space.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "vortex/errors.hpp"

namespace vortex {

Bounds::Bounds(std::vector<double> lower, std::vector<double> upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
  if (lower_.empty()) {
    throw ConfigError("Bounds: dimension must be >= 1");
  }
  if (lower_.size() != upper_.size()) {
    throw ConfigError("Bounds: lower has " + std::to_string(lower_.size()) +
                      " entries but upper has " + std::to_string(upper_.size()));
  }
  for (std::size_t i = 0; i < lower_.size(); ++i) {
    if (!(lower_[i] < upper_[i]) || !std::isfinite(lower_[i]) || !std::isfinite(upper_[i])) {
      throw ConfigError("Bounds: need finite lower < upper in dimension " + std::to_string(i));
    }
  }
}

Bounds Bounds::uniform(double lower, double upper, std::size_t dimension) {
  return Bounds(std::vector<double>(dimension, lower), std::vector<double>(dimension, upper));
}

bool Bounds::contains(std::span<const double> position) const {
  if (position.size() != dimension()) return false;
  for (std::size_t i = 0; i < position.size(); ++i) {
    if (!(position[i] >= lower_[i] && position[i] <= upper_[i])) return false;
  }
  return true;
}

RngStream::RngStream(std::uint64_t seed) : engine_(seed), seed_(seed) {}

double RngStream::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::vector<double> initial_center(const Bounds& bounds) {
  std::vector<double> center(bounds.dimension());
  for (std::size_t i = 0; i < center.size(); ++i) {
    center[i] = (bounds.upper()[i] + bounds.lower()[i]) / 2.0;
  }
  return center;
}

double initial_sigma(const Bounds& bounds) {
  const double hi = *std::max_element(bounds.upper().begin(), bounds.upper().end());
  const double lo = *std::min_element(bounds.lower().begin(), bounds.lower().end());
  return (hi - lo) / 2.0;
}

void sample_into(std::span<double> out, std::span<const double> center, double sigma,
                 RngStream& rng) {
  if (!(sigma >= 0.0)) {
    throw DomainError("sample_candidates: sigma must be >= 0");
  }
  const std::size_t d = center.size();
  for (std::size_t k = 0; k < out.size(); k += d) {
    for (std::size_t i = 0; i < d; ++i) {
      out[k + i] = center[i] + sigma * rng.normal();
    }
  }
}

std::vector<Candidate> sample_candidates(std::span<const double> center, double sigma,
                                         std::size_t count, RngStream& rng) {
  if (count == 0) {
    throw ConfigError("sample_candidates: count must be >= 1");
  }
  std::vector<Candidate> out(count);
  for (auto& candidate : out) {
    candidate.position.resize(center.size());
    sample_into(candidate.position, center, sigma, rng);
  }
  return out;
}

void repair_in_place(std::span<double> position, const Bounds& bounds, RngStream& rng) {
  const auto lower = bounds.lower();
  const auto upper = bounds.upper();
  for (std::size_t i = 0; i < position.size(); ++i) {
    if (position[i] < lower[i] || position[i] > upper[i] || std::isnan(position[i])) {
      position[i] = rng.uniform() * (upper[i] - lower[i]) + lower[i];
    }
  }
}

Candidate repair_bounds(Candidate candidate, const Bounds& bounds, RngStream& rng) {
  if (candidate.position.size() != bounds.dimension()) {
    throw ConfigError("repair_bounds: candidate dimension does not match bounds");
  }
  repair_in_place(candidate.position, bounds, rng);
  return candidate;
}

}  // namespace vortex
