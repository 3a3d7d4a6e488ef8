#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "szego/quadrature.hpp"

using namespace szego;
using std::numbers::pi;

TEST_CASE("unit points carry the exact complement") {
    const auto right = quad::from_right(1e-300);
    CHECK(right.complement == 1e-300);
    CHECK(right.t == 1.0);
    const auto left = quad::from_left(0.25);
    CHECK(left.complement == 0.75);
}

TEST_CASE("integrate smooth and endpoint-singular functions") {
    quad::Options opts;
    opts.tol = 1e-12;
    auto poly = quad::integrate([](quad::UnitPoint p) { return p.t * p.t; }, opts);
    CHECK(std::abs(poly.value - 1.0 / 3.0) <= 1e-13);

    // int_0^1 log t dt = -1, singular at the left end
    auto logt = quad::integrate([](quad::UnitPoint p) { return std::log(p.t); }, opts);
    CHECK(std::abs(logt.value + 1.0) <= 1e-11);

    // int_0^1 (1-t)^{-1/2} dt = 2, singular at the right end
    auto inv_sqrt = quad::integrate([](quad::UnitPoint p) { return 1.0 / std::sqrt(p.complement); }, opts);
    CHECK(std::abs(inv_sqrt.value - 2.0) <= 1e-10);
}

TEST_CASE("fourier moments of a trigonometric polynomial") {
    quad::Options opts;
    opts.tol = 1e-13;
    // f = 1 + 2 cos(2 pi t): moments k = 0, +-1 are 1, 1; others zero.
    const auto m = quad::fourier_moments(
        [](quad::UnitPoint p) { return 1.0 + 2.0 * std::cos(2.0 * pi * p.t); }, 0, 6, +1, opts);
    CHECK(std::abs(m[0].value - 1.0) <= 1e-13);
    CHECK(std::abs(m[1].value - 1.0) <= 1e-13);
    for (int k = 2; k <= 6; ++k) CHECK(std::abs(m[k].value) <= 1e-13);
}

TEST_CASE("fourier moment sign convention") {
    quad::Options opts;
    opts.tol = 1e-13;
    // f = sin(2 pi t): int e^{+2 pi i t} sin = i/2, int e^{-2 pi i t} sin = -i/2
    auto f = [](quad::UnitPoint p) { return std::sin(2.0 * pi * p.t); };
    const auto plus = quad::fourier_moments(f, 1, 1, +1, opts);
    const auto minus = quad::fourier_moments(f, 1, 1, -1, opts);
    CHECK(std::abs(plus[0].value - std::complex<double>(0.0, 0.5)) <= 1e-13);
    CHECK(std::abs(minus[0].value - std::complex<double>(0.0, -0.5)) <= 1e-13);
}

TEST_CASE("unit_phase is accurate near the right endpoint") {
    const auto p = quad::from_right(1e-9);
    const auto z = quad::unit_phase(p, 3, +1);
    const std::complex<double> want = std::polar(1.0, -2.0 * pi * 3e-9);
    CHECK(std::abs(z - want) <= 1e-15);
}
