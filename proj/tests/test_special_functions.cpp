#include <doctest.h>

#include <cmath>
#include <numbers>

#include "szego/errors.hpp"
#include "szego/special_functions.hpp"

using namespace szego;
using std::numbers::pi;

namespace {

bool close_rel(double got, double want, double rel) { return std::abs(got - want) <= rel * std::abs(want); }

}  // namespace

TEST_CASE("hurwitz_zeta closed forms") {
    CHECK(close_rel(hurwitz_zeta(2.0, 1.0), pi * pi / 6.0, 1e-12));
    CHECK(close_rel(hurwitz_zeta(2.0, 0.5), pi * pi / 2.0, 1e-12));
    CHECK(close_rel(hurwitz_zeta(4.0, 1.0), std::pow(pi, 4) / 90.0, 1e-12));
}

TEST_CASE("hurwitz_zeta against a high-precision direct-summation value") {
    // 40-digit reference; the plain series plus its integral tail agrees.
    CHECK(close_rel(hurwitz_zeta(2.5, 0.25), 32.84745195469768586, 1e-12));
}

TEST_CASE("hurwitz_zeta shift recurrence on a grid") {
    for (double s : {1.1, 1.5, 2.0, 2.5, 3.0, 4.5})
        for (double a : {0.01, 0.1, 0.25, 0.5, 0.75, 0.999}) {
            CAPTURE(s);
            CAPTURE(a);
            const double lhs = hurwitz_zeta(s, a);
            const double rhs = std::pow(a, -s) + detail::hurwitz_zeta_em(s, a + 1.0);
            CHECK(close_rel(lhs, rhs, 1e-12));
        }
}

TEST_CASE("hurwitz_zeta domain") {
    CHECK_THROWS_AS(hurwitz_zeta(1.0, 0.5), DomainError);
    CHECK_THROWS_AS(hurwitz_zeta(0.5, 0.5), DomainError);
    CHECK_THROWS_AS(hurwitz_zeta(2.0, 0.0), DomainError);
    CHECK_THROWS_AS(hurwitz_zeta(2.0, 1.5), DomainError);
    CHECK_THROWS_AS(hurwitz_zeta(2.0, -0.1), DomainError);
}

TEST_CASE("riemann_zeta values") {
    CHECK(close_rel(riemann_zeta(2.0), pi * pi / 6.0, 1e-12));
    CHECK(std::abs(riemann_zeta(-1.0) + 1.0 / 12.0) <= 1e-12);
    CHECK(close_rel(riemann_zeta(-1.5), -0.025485201889833036, 1e-12));
    CHECK(close_rel(riemann_zeta(-0.5), -0.20788622497735457, 1e-12));
    CHECK(close_rel(riemann_zeta(0.5), -1.4603545088095868, 1e-11));
    CHECK(std::abs(riemann_zeta(0.0) + 0.5) <= 1e-12);
    CHECK(riemann_zeta(-2.0) == 0.0);
    CHECK(riemann_zeta(-4.0) == 0.0);
}

TEST_CASE("riemann_zeta pole") {
    CHECK_THROWS_AS(riemann_zeta(1.0), PoleError);
}

TEST_CASE("riemann_zeta agrees with hurwitz_zeta at a = 1") {
    for (double s : {1.5, 2.0, 2.5, 3.0}) {
        CAPTURE(s);
        CHECK(close_rel(riemann_zeta(s), hurwitz_zeta(s, 1.0), 1e-12));
    }
}

TEST_CASE("riemann_zeta reflection self-consistency") {
    for (double s : {-0.5, -1.5}) {
        CAPTURE(s);
        const double reflected = std::pow(2.0, s) * std::pow(pi, s - 1.0) * std::sin(pi * s / 2.0) *
                                 std::exp(log_gamma(1.0 - s)) * hurwitz_zeta(1.0 - s, 1.0);
        CHECK(close_rel(riemann_zeta(s), reflected, 1e-12));
    }
}

TEST_CASE("log_gamma") {
    CHECK(std::abs(log_gamma(1.0)) <= 1e-15);
    CHECK(close_rel(log_gamma(0.5), 0.5 * std::log(pi), 1e-13));
    CHECK(close_rel(log_gamma(3.7), 1.4280723266653881, 1e-13));
    CHECK_THROWS_AS(log_gamma(0.0), DomainError);
    CHECK_THROWS_AS(log_gamma(-1.5), DomainError);
}
