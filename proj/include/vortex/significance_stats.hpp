#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace vortex {

// Fitness values with |v| < 1e-16 are recorded as exactly 0 before
// aggregation and testing.
inline constexpr double kFloorThreshold = 1e-16;
double floor_tiny(double value);

// '+' : A is significantly better (smaller), '-' : significantly worse,
// '=' : no significant difference.
enum class Verdict { better, equal, worse };
char verdict_symbol(Verdict v);

struct WilcoxonOptions {
  double alpha = 0.05;
  // Applies a 0.5 continuity correction to |T+ - mean| in the normal
  // approximation. Off by default: the uncorrected statistic reproduces the
  // published comparison tables (e.g. p = 1.73e-6 for 30 one-signed pairs).
  bool continuity_correction = false;
  // Pairs below this effective count use exact enumeration.
  std::size_t exact_below = 10;
};

struct WilcoxonResult {
  double t_plus = 0.0;   // rank sum of pairs with a > b
  double t_minus = 0.0;  // rank sum of pairs with a < b
  std::size_t n_effective = 0;
  double p_value = 1.0;
  Verdict verdict = Verdict::equal;
  bool exact = false;
};

// Two-sided Wilcoxon signed-rank test of paired samples (a_i, b_i), both
// floored first. Zero differences are dropped; tied magnitudes share their
// average rank. Throws ConfigError on empty or mismatched input.
WilcoxonResult wilcoxon_signed_rank(std::span<const double> a, std::span<const double> b,
                                    const WilcoxonOptions& options = {});

// Exact two-sided p-value for signed ranks: the share of the 2^n sign
// assignments whose T+ lies at least as far from n(n+1)/4 as the observed
// one. Ranks may be half-integers (average ranks under ties).
double exact_signed_rank_p(std::span<const double> ranks, double t_plus);

// Normal approximation with tie correction sum(t^3 - t) / 48 in the variance.
double normal_signed_rank_p(std::size_t n, double t_plus, std::span<const std::size_t> tie_sizes,
                            bool continuity_correction);

struct VerdictTally {
  std::size_t wins = 0;
  std::size_t ties = 0;
  std::size_t losses = 0;

  bool operator==(const VerdictTally&) const = default;
  std::string str() const;  // "wins/ties/losses"
};

VerdictTally verdict_counts(const std::map<std::string, WilcoxonResult>& results);

}  // namespace vortex
