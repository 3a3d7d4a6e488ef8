#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "szego/banded_closed_form.hpp"
#include "szego/errors.hpp"
#include "szego/oracle_validation.hpp"

using namespace szego;
using cd = std::complex<double>;

TEST_CASE("TridiagonalSpec") {
    const TridiagonalSpec spec(cd(-0.2, 0.0));
    CHECK(std::abs(spec.c0() - 0.9789063129307033) <= 1e-15);
    CHECK(TridiagonalSpec(cd(0.0, 0.0)).c0() == 1.0);
    for (cd q : {cd(0.3, 0.0), cd(0.0, 0.45), cd(0.2, -0.3), cd(0.49, 0.0)}) {
        const TridiagonalSpec s(q);
        CHECK(s.c0() > std::sqrt(0.5));
        CHECK(s.c0() <= 1.0);
        CHECK(std::pow(s.c0(), 4) - std::norm(q) > 0.0);
    }
    CHECK_THROWS_AS(TridiagonalSpec(cd(0.5, 0.0)), DomainError);
    CHECK_THROWS_AS(TridiagonalSpec(cd(0.0, -0.6)), DomainError);
}

TEST_CASE("tridiagonal closed-form entries") {
    const TridiagonalSpec spec(cd(-0.2, 0.0));
    CHECK(std::abs(tridiagonal_inverse_entry(spec, 1, 1) - 5.0 * (5.0 - std::sqrt(21.0)) / 2.0) <= 1e-14);
    CHECK(std::abs(tridiagonal_inverse_entry(spec, 2, 1) - 0.2 / std::pow(spec.c0(), 4)) <= 1e-15);
    CHECK(std::abs(tridiagonal_inverse_entry(spec, 2, 1) - 0.217804) <= 5e-6);

    const TridiagonalSpec zero(cd(0.0, 0.0));
    for (int k = 1; k <= 6; ++k)
        for (int j = 1; j <= 6; ++j) CHECK(tridiagonal_inverse_entry(zero, k, j) == cd(k == j ? 1.0 : 0.0));
    CHECK_THROWS_AS(tridiagonal_inverse_entry(spec, 0, 1), OutOfRangeError);
}

TEST_CASE("reference m=10 finite-section block") {
    const double want[5][5] = {{1.04356, 0.217804, 0.0454583, 0.0094877, 0.0019802},
                               {0.217804, 1.08902, 0.227292, 0.0474385, 0.00990099},
                               {0.0454583, 0.227292, 1.091, 0.227705, 0.0475248},
                               {0.0094877, 0.0474385, 0.227705, 1.09109, 0.227723},
                               {0.0019802, 0.00990099, 0.0475248, 0.227723, 1.09109}};
    const auto block = tridiagonal_inverse_block(TridiagonalSpec(cd(-0.2, 0.0)), 5);
    CHECK(block.meta().method == "closed-form");
    for (int k = 1; k <= 5; ++k)
        for (int j = 1; j <= 5; ++j) CHECK(std::abs(block(k, j) - want[k - 1][j - 1]) <= 5e-6);
}

TEST_CASE("closed form agrees with the quadrature pipeline") {
    for (cd q : {cd(-0.2, 0.0), cd(0.3, 0.0), cd(0.0, 0.45), cd(0.2, -0.3)}) {
        CAPTURE(q);
        const TridiagonalSpec spec(q);
        const auto closed = tridiagonal_inverse_block(spec, 8);
        const auto p = run_pipeline(BandedDensity({q}), 4 + 16 + 40, 1e-12);
        const auto general = inverse_block(p.psi, 8);
        CHECK((closed.matrix() - general.matrix()).cwiseAbs().maxCoeff() <= 1e-8);
    }
}

TEST_CASE("closed-form self-consistency") {
    for (cd q : {cd(-0.2, 0.0), cd(0.0, 0.45), cd(0.2, -0.3)}) {
        const TridiagonalSpec spec(q);
        const double c2 = spec.c0() * spec.c0();
        CHECK(std::abs(tridiagonal_inverse_entry(spec, 1, 1) - 1.0 / c2) <= 1e-14);
        const double r = std::norm(q) / (c2 * c2);
        double partial = 0.0;
        for (int j = 1; j <= 30; ++j) {
            partial += std::pow(r, j - 1) / c2;
            CHECK(std::abs(tridiagonal_inverse_entry(spec, j, j) - partial) <= 1e-14);
        }
    }
}

TEST_CASE("closed-form inverse times the tridiagonal section is the identity away from the edge") {
    const cd q(0.2, -0.3);
    const TridiagonalSpec spec(q);
    const BandedDensity d({q});
    const auto g = finite_section_matrix(d, 40);
    const auto inv = tridiagonal_inverse_block(spec, 40).matrix();
    const Eigen::MatrixXcd prod = g * inv;
    const Eigen::MatrixXcd interior = prod.block(10, 10, 20, 20);
    CHECK((interior - Eigen::MatrixXcd::Identity(20, 20)).cwiseAbs().maxCoeff() <= 1e-8);
}

TEST_CASE("large indices stay finite") {
    const TridiagonalSpec spec(cd(0.49, 0.0));
    const cd e = tridiagonal_inverse_entry(spec, 2000, 1990);
    CHECK(std::isfinite(e.real()));
    CHECK(std::abs(tridiagonal_inverse_entry(spec, 2000, 2000)) > 1.0);
}

TEST_CASE("tridiagonal series") {
    const TridiagonalSpec zero(cd(0.0, 0.0));
    const auto a0 = tridiagonal_psi_coefficients(zero, 5);
    for (int k = 0; k <= 5; ++k) CHECK(a0[k] == cd(k == 0 ? 1.0 : 0.0));

    const TridiagonalSpec spec(cd(-0.2, 0.0));
    const auto a = tridiagonal_psi_coefficients(spec, 6);
    const double c0 = spec.c0();
    CHECK(std::abs(a[0] - 1.0 / c0) <= 1e-15);
    CHECK(std::abs(a[1] - 0.2 / std::pow(c0, 3)) <= 1e-15);
    CHECK(std::abs(c0 * c0 - (5.0 + std::sqrt(21.0)) / 10.0) <= 1e-15);
    const auto s = tridiagonal_szego_coefficients(spec, 6);
    CHECK(s[0] == cd(c0));
    CHECK(std::abs(s[1] - cd(-0.2) / c0) <= 1e-16);
    for (int k = 2; k <= 6; ++k) CHECK(s[k] == cd(0.0));
    for (cd q : {cd(0.3, 0.1), cd(0.0, -0.4)}) {
        const TridiagonalSpec t(q);
        CHECK(series_reciprocal_residual(tridiagonal_psi_coefficients(t, 50), tridiagonal_szego_coefficients(t, 50)) <=
              1e-14);
    }
}

TEST_CASE("pentadiagonal coefficient formulas") {
    const auto c = pentadiagonal_szego_coefficients(cd(-0.25), cd(1.0 / 3.0), 0.909567);
    CHECK(std::abs(c.c1 - (-0.195918)) <= 5e-6);
    CHECK(std::abs(c.c2 - 0.366475) <= 5e-6);

    const auto tri = pentadiagonal_szego_coefficients(cd(0.3, 0.2), cd(0.0), 0.9);
    CHECK(std::abs(tri.c1 - cd(0.3, 0.2) / 0.9) <= 1e-15);
    CHECK(tri.c2 == cd(0.0));

    const double c0 = 0.93, q1 = -0.21, q2 = 0.17;
    const auto real = pentadiagonal_szego_coefficients(cd(q1), cd(q2), c0);
    CHECK(std::abs(real.c1 - c0 * q1 / (c0 * c0 + q2)) <= 1e-15);

    // c0 from the pipeline reproduces the full pipeline's c1, c2.
    const std::vector<cd> q{cd(-0.1, 0.2), cd(0.15, -0.1)};
    const auto p = run_pipeline(BandedDensity(q), 8, 1e-12);
    const auto f = pentadiagonal_szego_coefficients(q[0], q[1], p.szego[0].real());
    CHECK(std::abs(f.c1 - p.szego[1]) <= 1e-10);
    CHECK(std::abs(f.c2 - p.szego[2]) <= 1e-10);

    CHECK_THROWS_AS(pentadiagonal_szego_coefficients(cd(0.1), cd(0.25), 0.5), DegenerateDenominatorError);
}

TEST_CASE("polynomial conjecture checker") {
    const std::vector<cd> tri{cd(-0.2)};
    const auto r1 = polynomial_conjecture_check(tri, 20, 1e-10);
    CHECK(r1.is_polynomial_degree_m);
    CHECK(r1.max_tail_coefficient <= 1e-10);
    CHECK(r1.band_order == 1);

    const std::vector<cd> penta{cd(-0.25), cd(1.0 / 3.0)};
    const auto r2 = polynomial_conjecture_check(penta);
    CHECK(r2.is_polynomial_degree_m);
    CHECK(r2.max_tail_coefficient <= 1e-8);
    CHECK(r2.szego.order() == 4 * 2 + 16);

    const std::vector<cd> seven{cd(0.3), cd(0.2, 0.2), cd(0.1, 0.1)};
    const auto r3 = polynomial_conjecture_check(seven);
    CHECK(r3.is_polynomial_degree_m);

    CHECK_THROWS_AS(polynomial_conjecture_check(std::vector<cd>{cd(0.7)}), DomainError);
}
