#ifndef SZEGO_SPECIAL_FUNCTIONS_HPP_
#define SZEGO_SPECIAL_FUNCTIONS_HPP_

// Real-argument zeta and gamma functions used by the fractional Gaussian
// noise spectral density.  All functions are pure and thread-safe.

namespace szego {

// Hurwitz zeta  zeta(s, a) = sum_{n >= 0} (n + a)^{-s}  for s > 1, 0 < a <= 1.
// Throws DomainError outside that range.
double hurwitz_zeta(double s, double a);

// Riemann zeta for any real s != 1 (PoleError at s = 1).  Negative arguments
// go through the functional equation.
double riemann_zeta(double s);

// log Gamma(x) for x > 0.
double log_gamma(double x);

namespace detail {

// Euler-Maclaurin evaluation of zeta(s, a) for any a > 0 and s != 1.  This
// is the analytic continuation in s, so it is also valid for s < 1 (accurate
// while s > -10).  No argument checking beyond s != 1.
double hurwitz_zeta_em(double s, double a);

}  // namespace detail

}  // namespace szego

#endif  // SZEGO_SPECIAL_FUNCTIONS_HPP_
