#include "szego/special_functions.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "szego/errors.hpp"

namespace szego {

namespace {

// Terms summed explicitly before the Euler-Maclaurin tail.
constexpr int kShift = 15;

// B_{2k} / (2k)!  for k = 1..6  (B_2 .. B_12).
constexpr std::array<double, 6> kBernoulliOverFactorial = {
    (1.0 / 6.0) / 2.0,
    (-1.0 / 30.0) / 24.0,
    (1.0 / 42.0) / 720.0,
    (-1.0 / 30.0) / 40320.0,
    (5.0 / 66.0) / 3628800.0,
    (-691.0 / 2730.0) / 479001600.0,
};

bool is_negative_even_integer(double s) {
    return s < 0.0 && std::floor(s) == s && std::fmod(-s, 2.0) == 0.0;
}

}  // namespace

namespace detail {

double hurwitz_zeta_em(double s, double a) {
    if (s == 1.0) throw PoleError("zeta: pole at s = 1");
    double sum = 0.0;
    for (int n = 0; n < kShift; ++n) sum += std::pow(n + a, -s);
    const double x = kShift + a;
    const double x_pow = std::pow(x, -s);
    sum += x * x_pow / (s - 1.0) + 0.5 * x_pow;
    // Tail term k: B_{2k}/(2k)! * s(s+1)...(s+2k-2) * x^{-s-2k+1}
    double rising = s * x_pow / x;
    for (std::size_t k = 0; k < kBernoulliOverFactorial.size(); ++k) {
        sum += kBernoulliOverFactorial[k] * rising;
        const double m = 2.0 * static_cast<double>(k + 1);
        rising *= (s + m - 1.0) * (s + m) / (x * x);
    }
    return sum;
}

}  // namespace detail

double hurwitz_zeta(double s, double a) {
    if (!(s > 1.0)) throw DomainError("hurwitz_zeta: requires s > 1, got s = " + std::to_string(s));
    if (!(a > 0.0 && a <= 1.0))
        throw DomainError("hurwitz_zeta: requires 0 < a <= 1, got a = " + std::to_string(a));
    return detail::hurwitz_zeta_em(s, a);
}

double log_gamma(double x) {
    if (!(x > 0.0)) throw DomainError("log_gamma: requires x > 0, got x = " + std::to_string(x));
    return std::lgamma(x);
}

double riemann_zeta(double s) {
    if (s == 1.0) throw PoleError("riemann_zeta: pole at s = 1");
    if (std::isnan(s)) throw DomainError("riemann_zeta: NaN argument");
    if (s >= 0.0) return detail::hurwitz_zeta_em(s, 1.0);
    if (is_negative_even_integer(s)) return 0.0;

    // zeta(s) = 2^s pi^{s-1} sin(pi s / 2) Gamma(1-s) zeta(1-s), evaluated in
    // logs so that Gamma(1-s) cannot overflow before the product is formed.
    const double reflected = 1.0 - s;
    const double sine = std::sin(std::numbers::pi * s / 2.0);
    const double zeta_reflected = detail::hurwitz_zeta_em(reflected, 1.0);
    const double log_magnitude = s * std::numbers::ln2 + (s - 1.0) * std::log(std::numbers::pi) +
                                 log_gamma(reflected) + std::log(std::abs(sine)) +
                                 std::log(zeta_reflected);
    return std::copysign(std::exp(log_magnitude), sine);
}

}  // namespace szego
