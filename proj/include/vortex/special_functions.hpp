#pragma once

// Gamma-family kernels used by the radius schedule.
//
// Argument order follows the integration-limit-first convention: P(x, a) is
// the lower regularized incomplete gamma function with integration limit x
// and shape a, i.e.
//
//   P(x, a) = 1/Gamma(a) * integral_0^x exp(-t) t^(a-1) dt
//   Q(x, a) = 1 - P(x, a)
//
// All functions are pure and may be called concurrently.

namespace vortex {

// ln Gamma(a) for a > 0. Throws DomainError otherwise.
double log_gamma(double a);

// P(x, a) for x >= 0, a > 0. Series for x < a + 1, continued fraction above.
double lower_regularized_gamma(double x, double a);

// Q(x, a) = 1 - P(x, a), evaluated directly on the branch where it is
// accurate.
double upper_regularized_gamma(double x, double a);

// Inverse of P in its integration limit: returns x with P(x, a) = p.
//
// Requires 0 <= p < 1 and a > 0. Returns 0 for p == 0, and also when the
// root lies below the smallest positive double (this happens for very small
// shapes, where x ~ (p * Gamma(a + 1))^(1/a)).
double inverse_lower_regularized_gamma(double p, double a);

}  // namespace vortex
