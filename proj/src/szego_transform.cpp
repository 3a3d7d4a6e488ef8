#include "szego/szego_transform.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "szego/errors.hpp"

namespace szego {

namespace {

CoefficientSeries exp_series(const LogFourierCoeffs& u, int order, double sign, SeriesRole role) {
    if (order < 0) throw DomainError("series order must be non-negative");
    if (order > u.order())
        throw OutOfRangeError("log-Fourier coefficients available to order " + std::to_string(u.order()) +
                              ", requested " + std::to_string(order));
    CoefficientSeries out;
    out.role = role;
    out.source_tol = u.quad_tol;
    out.coeffs.resize(static_cast<std::size_t>(order) + 1);
    out.coeffs[0] = std::exp(sign * u.u[0].real());
    for (int n = 0; n < order; ++n) {
        std::complex<double> acc = 0.0;
        for (int k = 0; k <= n; ++k) acc += static_cast<double>(k + 1) * (sign * u.u[k + 1]) * out.coeffs[n - k];
        out.coeffs[n + 1] = acc / static_cast<double>(n + 1);
    }
    return out;
}

}  // namespace

LogFourierCoeffs log_fourier_coefficients(const SpectralDensity& d, int order, double tol) {
    if (order < 0) throw DomainError("truncation order must be non-negative");
    if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
    const SzegoConditionReport report = szego_condition_report(d, tol);
    if (!std::isfinite(report.log_integral))
        throw SzegoConditionError("int log phi is not finite");

    quad::Options options;
    options.tol = tol;
    const auto moments =
        quad::fourier_moments([&](UnitPoint p) { return std::log(d(p)); }, 0, order, -1, options);

    LogFourierCoeffs out;
    out.quad_tol = tol;
    out.u.resize(moments.size());
    out.u[0] = -0.5 * moments[0].value.real();
    for (std::size_t k = 1; k < moments.size(); ++k) out.u[k] = -moments[k].value;
    // phi(t) = phi(1-t) makes every u_k real; drop the rounding residue.
    if (d.is_real_symmetric())
        for (auto& z : out.u) z = z.real();
    for (const auto& m : moments) out.max_error_estimate = std::max(out.max_error_estimate, m.error);
    return out;
}

CoefficientSeries psi_coefficients(const LogFourierCoeffs& u, int order) {
    return exp_series(u, order, +1.0, SeriesRole::psi);
}

CoefficientSeries szego_coefficients(const LogFourierCoeffs& u, int order) {
    return exp_series(u, order, -1.0, SeriesRole::szego);
}

double series_reciprocal_residual(const CoefficientSeries& psi, const CoefficientSeries& szego) {
    if (psi.order() != szego.order())
        throw DimensionMismatchError("series_reciprocal_residual: truncation orders differ");
    double worst = 0.0;
    for (int n = 0; n <= psi.order(); ++n) {
        std::complex<double> acc = n == 0 ? -1.0 : 0.0;
        for (int k = 0; k <= n; ++k) acc += psi.coeffs[k] * szego.coeffs[n - k];
        worst = std::max(worst, std::abs(acc));
    }
    return worst;
}

std::complex<double> evaluate_series(const CoefficientSeries& s, std::complex<double> z) {
    std::complex<double> acc = 0.0;
    for (auto it = s.coeffs.rbegin(); it != s.coeffs.rend(); ++it) acc = acc * z + *it;
    return acc;
}

std::complex<double> szego_eval_integral(const SpectralDensity& d, std::complex<double> z, double tol) {
    if (!(std::abs(z) < 1.0)) throw DomainError("szego_eval_integral requires |z| < 1");
    if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
    quad::Options options;
    options.tol = tol;
    const auto integrand = [&](UnitPoint p) -> std::complex<double> {
        const std::complex<double> e = quad::unit_phase(p, 1, +1);
        return (e + z) / (e - z) * std::log(d(p));
    };
    // The Herglotz kernel varies on the scale 1 - |z|.
    const int panels = static_cast<int>(std::ceil(8.0 / (1.0 - std::abs(z))));
    const quad::Estimate e = quad::integrate(integrand, options, panels);
    return std::exp(0.5 * e.value);
}

SzegoPipeline run_pipeline(const SpectralDensity& d, int order, double tol) {
    SzegoPipeline out;
    out.u = log_fourier_coefficients(d, order, tol);
    out.psi = psi_coefficients(out.u, order);
    out.szego = szego_coefficients(out.u, order);
    return out;
}

}  // namespace szego
