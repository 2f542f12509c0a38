#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "vortex/search_space.hpp"

namespace vortex {

enum class Modality { unimodal, multimodal };
enum class Separability { separable, non_separable };

// Objective callback. `noise` is the caller's stream for objectives with a
// stochastic term (Quartic); deterministic objectives ignore it, and a null
// stream disables the stochastic term.
using Evaluator = std::function<double(std::span<const double> x, RngStream* noise)>;

// A bound-constrained objective plus its benchmark-table metadata.
struct ObjectiveSpec {
  int id = 0;  // 1..50 for the built-in suite, 0 for user objectives
  std::string name;
  Bounds bounds;
  Modality modality = Modality::multimodal;
  Separability separability = Separability::non_separable;
  // Reference global minimum value, unset where none is published.
  std::optional<double> known_minimum;
  // A global minimizer, where one is known.
  std::optional<std::vector<double>> known_minimizer;
  Evaluator evaluator;

  std::size_t dimension() const { return bounds.dimension(); }
  // "F3" style label for built-ins, the name otherwise.
  std::string label() const;
};

// Checked evaluation; throws ConfigError on dimension mismatch.
double evaluate(const ObjectiveSpec& spec, std::span<const double> x, RngStream* noise = nullptr);

// The 50-function suite, in id order.
const std::vector<ObjectiveSpec>& benchmark_suite();

// Throws LookupError for ids outside 1..50.
const ObjectiveSpec& get_function(int id);

// Accepts "F3", "f03", "3", or a case-insensitive name ("sphere",
// "Six Hump Camel Back", "dixon-price"). Throws LookupError.
const ObjectiveSpec& find_function(std::string_view key);

// Machine-readable registry: [{id, label, name, dimension, lower, upper,
// known_minimum, modality, separability}, ...].
nlohmann::json registry_json();

}  // namespace vortex
