#include "vortex/significance_stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "vortex/errors.hpp"

namespace vortex {

double floor_tiny(double value) { return std::abs(value) < kFloorThreshold ? 0.0 : value; }

char verdict_symbol(Verdict v) {
  switch (v) {
    case Verdict::better: return '+';
    case Verdict::worse: return '-';
    case Verdict::equal: break;
  }
  return '=';
}

double exact_signed_rank_p(std::span<const double> ranks, double t_plus) {
  const std::size_t n = ranks.size();
  if (n == 0) return 1.0;
  if (n > 62) throw ConfigError("exact_signed_rank_p: too many pairs for exact enumeration");

  // Doubled ranks are integers even under average-rank ties, so the null
  // distribution is a subset-sum count over integers.
  std::vector<long> doubled(n);
  long total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    doubled[i] = std::lround(2.0 * ranks[i]);
    total += doubled[i];
  }
  std::vector<std::uint64_t> ways(static_cast<std::size_t>(total) + 1, 0);
  ways[0] = 1;
  long reach = 0;
  for (long r : doubled) {
    for (long s = reach; s >= 0; --s) {
      if (ways[static_cast<std::size_t>(s)] != 0) ways[static_cast<std::size_t>(s + r)] += ways[static_cast<std::size_t>(s)];
    }
    reach += r;
  }
  const long observed = std::lround(2.0 * t_plus);
  const long observed_gap = std::labs(2 * observed - total);
  std::uint64_t extreme = 0;
  for (long s = 0; s <= total; ++s) {
    if (std::labs(2 * s - total) >= observed_gap) extreme += ways[static_cast<std::size_t>(s)];
  }
  return static_cast<double>(extreme) / std::ldexp(1.0, static_cast<int>(n));
}

double normal_signed_rank_p(std::size_t n, double t_plus, std::span<const std::size_t> tie_sizes,
                            bool continuity_correction) {
  if (n == 0) return 1.0;
  const double dn = static_cast<double>(n);
  const double mean = dn * (dn + 1.0) / 4.0;
  double variance = dn * (dn + 1.0) * (2.0 * dn + 1.0) / 24.0;
  for (std::size_t t : tie_sizes) {
    const double dt = static_cast<double>(t);
    variance -= (dt * dt * dt - dt) / 48.0;
  }
  double gap = std::abs(t_plus - mean);
  if (continuity_correction) gap = std::max(0.0, gap - 0.5);
  if (variance <= 0.0) return 1.0;
  const double z = gap / std::sqrt(variance);
  return std::min(1.0, std::erfc(z / std::sqrt(2.0)));
}

WilcoxonResult wilcoxon_signed_rank(std::span<const double> a, std::span<const double> b,
                                    const WilcoxonOptions& options) {
  if (a.empty()) throw ConfigError("wilcoxon_signed_rank: empty samples");
  if (a.size() != b.size()) {
    throw ConfigError("wilcoxon_signed_rank: sample sizes differ (" + std::to_string(a.size()) +
                      " vs " + std::to_string(b.size()) + ")");
  }

  std::vector<double> diffs;
  diffs.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = floor_tiny(a[i]) - floor_tiny(b[i]);
    if (d != 0.0) diffs.push_back(d);
  }

  WilcoxonResult result;
  result.n_effective = diffs.size();
  if (diffs.empty()) return result;

  std::vector<std::size_t> order(diffs.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return std::abs(diffs[i]) < std::abs(diffs[j]);
  });

  std::vector<double> ranks(diffs.size());
  std::vector<std::size_t> tie_sizes;
  for (std::size_t start = 0; start < order.size();) {
    std::size_t stop = start + 1;
    while (stop < order.size() && std::abs(diffs[order[stop]]) == std::abs(diffs[order[start]])) {
      ++stop;
    }
    const double average = (static_cast<double>(start + 1) + static_cast<double>(stop)) / 2.0;
    for (std::size_t k = start; k < stop; ++k) ranks[order[k]] = average;
    if (stop - start > 1) tie_sizes.push_back(stop - start);
    start = stop;
  }

  for (std::size_t i = 0; i < diffs.size(); ++i) {
    (diffs[i] > 0.0 ? result.t_plus : result.t_minus) += ranks[i];
  }

  if (result.n_effective < options.exact_below) {
    result.exact = true;
    result.p_value = exact_signed_rank_p(ranks, result.t_plus);
  } else {
    result.p_value = normal_signed_rank_p(result.n_effective, result.t_plus, tie_sizes,
                                          options.continuity_correction);
  }

  if (result.p_value < options.alpha && result.t_plus != result.t_minus) {
    result.verdict = result.t_minus > result.t_plus ? Verdict::better : Verdict::worse;
  }
  return result;
}

std::string VerdictTally::str() const {
  return std::to_string(wins) + "/" + std::to_string(ties) + "/" + std::to_string(losses);
}

VerdictTally verdict_counts(const std::map<std::string, WilcoxonResult>& results) {
  VerdictTally tally;
  for (const auto& [name, r] : results) {
    switch (r.verdict) {
      case Verdict::better: ++tally.wins; break;
      case Verdict::equal: ++tally.ties; break;
      case Verdict::worse: ++tally.losses; break;
    }
  }
  return tally;
}

}  // namespace vortex
