#include "vortex/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "vortex/errors.hpp"

namespace vortex {
namespace {

constexpr double kEpsilon = std::numeric_limits<double>::epsilon();
constexpr double kTiny = std::numeric_limits<double>::min() / kEpsilon;
constexpr int kMaxTerms = 100000;

void require_shape(double a, const char* where) {
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw DomainError(std::string(where) + ": shape parameter must be finite and > 0, got " +
                      std::to_string(a));
  }
}

void require_limit(double x, const char* where) {
  if (!(x >= 0.0)) {
    throw DomainError(std::string(where) + ": integration limit must be >= 0, got " +
                      std::to_string(x));
  }
}

double lgamma_unchecked(double a) {
#if defined(__GLIBC__)
  // lgamma() writes the global signgam; the reentrant form keeps concurrent
  // optimizer runs free of data races.
  int sign = 0;
  return ::lgamma_r(a, &sign);
#else
  return std::lgamma(a);
#endif
}

// P(x, a) by the power series
//   x^a e^-x / Gamma(a+1) * sum_{n>=0} x^n / ((a+1)...(a+n)).
// Converges for all x but is only used for x < a + 1.
double series_p(double x, double a) {
  double term = 1.0;
  double sum = 1.0;
  for (int n = 1; n < kMaxTerms; ++n) {
    term *= x / (a + n);
    sum += term;
    if (std::abs(term) < std::abs(sum) * kEpsilon) {
      break;
    }
  }
  const double log_prefactor = a * std::log(x) - x - lgamma_unchecked(a + 1.0);
  return sum * std::exp(log_prefactor);
}

// Q(x, a) by the Legendre continued fraction (modified Lentz), x >= a + 1.
double continued_fraction_q(double x, double a) {
  double b = x + 1.0 - a;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < kMaxTerms; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) <= kEpsilon) {
      break;
    }
  }
  const double log_prefactor = a * std::log(x) - x - lgamma_unchecked(a);
  return std::exp(log_prefactor) * h;
}

double clamp_unit(double v) { return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v); }

}  // namespace

double log_gamma(double a) {
  require_shape(a, "log_gamma");
  return lgamma_unchecked(a);
}

double lower_regularized_gamma(double x, double a) {
  require_shape(a, "lower_regularized_gamma");
  require_limit(x, "lower_regularized_gamma");
  if (x == 0.0) return 0.0;
  if (std::isinf(x)) return 1.0;
  if (x < a + 1.0) return clamp_unit(series_p(x, a));
  return clamp_unit(1.0 - continued_fraction_q(x, a));
}

double upper_regularized_gamma(double x, double a) {
  require_shape(a, "upper_regularized_gamma");
  require_limit(x, "upper_regularized_gamma");
  if (x == 0.0) return 1.0;
  if (std::isinf(x)) return 0.0;
  if (x < a + 1.0) return clamp_unit(1.0 - series_p(x, a));
  return clamp_unit(continued_fraction_q(x, a));
}

double inverse_lower_regularized_gamma(double p, double a) {
  require_shape(a, "inverse_lower_regularized_gamma");
  if (!(p >= 0.0 && p < 1.0)) {
    throw DomainError("inverse_lower_regularized_gamma: probability must lie in [0, 1), got " +
                      std::to_string(p));
  }
  if (p == 0.0) return 0.0;

  const double lgamma_a = lgamma_unchecked(a);

  // P(x, a) <= x^a / Gamma(a + 1), so this is a lower bound on the root and
  // is asymptotically exact as x -> 0 (the small-shape regime).
  const double log_lower_bound = (std::log(p) + lgamma_unchecked(a + 1.0)) / a;
  if (log_lower_bound < std::log(std::numeric_limits<double>::denorm_min())) {
    return 0.0;
  }
  const double lower_bound = std::exp(log_lower_bound);

  double x;
  if (a > 1.0) {
    const double pp = p < 0.5 ? p : 1.0 - p;
    const double t = std::sqrt(-2.0 * std::log(pp));
    double z = (2.30753 + t * 0.27061) / (1.0 + t * (0.99229 + t * 0.04481)) - t;
    if (p < 0.5) z = -z;
    const double w = 1.0 - 1.0 / (9.0 * a) - z / (3.0 * std::sqrt(a));
    x = std::max(1e-3, a * w * w * w);
  } else {
    const double t = 1.0 - a * (0.253 + a * 0.12);
    if (p < t) {
      x = std::exp(std::log(p / t) / a);
    } else {
      x = 1.0 - std::log(1.0 - (p - t) / (1.0 - t));
    }
  }
  if (!(x >= lower_bound) || !std::isfinite(x)) x = lower_bound;

  // Safeguarded Newton: the bracket [lo, hi] always contains the root, and
  // any Newton step that leaves it is replaced by a bisection step.
  double lo = 0.0;
  double hi = std::numeric_limits<double>::infinity();
  for (int iter = 0; iter < 400; ++iter) {
    const double residual = lower_regularized_gamma(x, a) - p;
    if (residual == 0.0) return x;
    if (residual < 0.0) {
      lo = x;
    } else {
      hi = x;
    }

    const double log_density = (a - 1.0) * std::log(x) - x - lgamma_a;
    double next = x - residual * std::exp(-log_density);
    if (!(next > lo && next < hi) || !std::isfinite(next)) {
      if (std::isinf(hi)) {
        next = 2.0 * x + 1.0;
      } else if (lo == 0.0) {
        next = std::max(hi * 0.125, lower_bound);
        if (!(next < hi)) next = 0.5 * hi;
      } else if (hi > 8.0 * lo) {
        next = std::sqrt(lo) * std::sqrt(hi);
      } else {
        next = lo + 0.5 * (hi - lo);
      }
    }
    if (std::abs(next - x) <= 4.0 * kEpsilon * next) return next;
    if (!std::isinf(hi) && hi - lo <= 4.0 * kEpsilon * hi) return next;
    x = next;
  }
  return x;
}

}  // namespace vortex
