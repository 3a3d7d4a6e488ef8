#include "szego/banded_closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "szego/errors.hpp"

namespace szego {

namespace {

constexpr double kBoundaryMargin = 1e-12;
constexpr double kDefaultConjectureQuadTol = 1e-12;

std::complex<double> integer_power(std::complex<double> base, int exponent) {
    std::complex<double> result = 1.0;
    for (; exponent > 0; exponent >>= 1) {
        if (exponent & 1) result *= base;
        base *= base;
    }
    return result;
}

}  // namespace

TridiagonalSpec::TridiagonalSpec(std::complex<double> q) : q_(q) {
    if (!(std::abs(q) < 0.5 - kBoundaryMargin))
        throw DomainError("tridiagonal closed form requires |q| < 1/2");
    c0_ = std::sqrt((1.0 + std::sqrt(1.0 - 4.0 * std::norm(q))) / 2.0);
}

std::complex<double> tridiagonal_inverse_entry(const TridiagonalSpec& spec, int k, int j) {
    if (k < 1 || j < 1) throw OutOfRangeError("indices are 1-based");
    if (j > k) return std::conj(tridiagonal_inverse_entry(spec, j, k));
    const double c0 = spec.c0();
    const double c02 = c0 * c0;
    const double q2 = std::norm(spec.q());
    const double sign = (j + k) % 2 == 0 ? 1.0 : -1.0;
    // Same expression regrouped as (q/c0^2)^{k-j} c0^2 (1 - (|q|^2/c0^4)^j) / (c0^4 - |q|^2)
    // so that no power of c0 over- or underflows for large indices.
    const std::complex<double> power = integer_power(spec.q() / c02, k - j);
    const double geometric = c02 * (1.0 - std::pow(q2 / (c02 * c02), j)) / (c02 * c02 - q2);
    return sign * power * geometric;
}

InverseBlock tridiagonal_inverse_block(const TridiagonalSpec& spec, int n) {
    if (n < 1) throw OutOfRangeError("block size must be positive");
    Eigen::MatrixXcd out(n, n);
    for (int r = 1; r <= n; ++r)
        for (int c = 1; c <= r; ++c) {
            out(r - 1, c - 1) = tridiagonal_inverse_entry(spec, r, c);
            out(c - 1, r - 1) = std::conj(out(r - 1, c - 1));
        }
    return InverseBlock(std::move(out), {"closed-form", -1, 0.0, std::nullopt, std::nullopt});
}

CoefficientSeries tridiagonal_psi_coefficients(const TridiagonalSpec& spec, int order) {
    if (order < 0) throw DomainError("series order must be non-negative");
    CoefficientSeries out;
    out.role = SeriesRole::psi;
    out.coeffs.resize(static_cast<std::size_t>(order) + 1);
    const double c0 = spec.c0();
    const std::complex<double> ratio = -spec.q() / (c0 * c0);
    std::complex<double> term = 1.0 / c0;
    for (int n = 0; n <= order; ++n) {
        out.coeffs[n] = term;
        term *= ratio;
    }
    return out;
}

CoefficientSeries tridiagonal_szego_coefficients(const TridiagonalSpec& spec, int order) {
    if (order < 0) throw DomainError("series order must be non-negative");
    CoefficientSeries out;
    out.role = SeriesRole::szego;
    out.coeffs.assign(static_cast<std::size_t>(order) + 1, 0.0);
    out.coeffs[0] = spec.c0();
    if (order >= 1) out.coeffs[1] = spec.q() / spec.c0();
    return out;
}

PentadiagonalCoefficients pentadiagonal_szego_coefficients(std::complex<double> q1, std::complex<double> q2,
                                                           double c0) {
    if (!(c0 > 0.0)) throw DomainError("c0 must be positive");
    const double denominator = std::pow(c0, 4) - std::norm(q2);
    if (std::abs(denominator) < 1e-14)
        throw DegenerateDenominatorError("pentadiagonal coefficients: c0^4 - |q2|^2 vanishes");
    const std::complex<double> c1 = c0 * (c0 * c0 * q1 - q2 * std::conj(q1)) / denominator;
    return {c0, c1, q2 / c0};
}

ConjectureCheck polynomial_conjecture_check(std::span<const std::complex<double>> q, int order, double tol) {
    if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
    const BandedDensity density(std::vector<std::complex<double>>(q.begin(), q.end()));
    const int m = density.order();
    if (order < m) throw DomainError("conjecture check needs N >= m");
    const LogFourierCoeffs u = log_fourier_coefficients(density, order, tol / 100.0);
    ConjectureCheck out;
    out.band_order = m;
    out.szego = szego_coefficients(u, order);
    for (int k = m + 1; k <= order; ++k)
        out.max_tail_coefficient = std::max(out.max_tail_coefficient, std::abs(out.szego.coeffs[k]));
    out.is_polynomial_degree_m = out.max_tail_coefficient <= tol;
    return out;
}

ConjectureCheck polynomial_conjecture_check(std::span<const std::complex<double>> q) {
    const int m = static_cast<int>(q.size());
    return polynomial_conjecture_check(q, 4 * m + 16, 100.0 * kDefaultConjectureQuadTol);
}

}  // namespace szego
