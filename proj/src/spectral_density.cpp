#include "szego/spectral_density.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "szego/errors.hpp"
#include "szego/special_functions.hpp"

namespace szego {

namespace {

void check_hurst(double hurst) {
    if (!(hurst > 0.0 && hurst < 1.0))
        throw DomainError("Hurst index must lie in (0, 1), got " + std::to_string(hurst));
}

double fgn_value(double hurst, double normalizer, UnitPoint p) {
    if (!(p.t > 0.0 && p.complement > 0.0))
        throw DomainError("fGn density is defined on the open interval (0, 1)");
    const double near = std::min(p.t, p.complement);
    const double far = std::max(p.t, p.complement);
    const double s = 2.0 * hurst + 1.0;
    const double sine = std::sin(std::numbers::pi * near);
    // sin^2(pi t) t^{-s} = (sin(pi t)/t)^2 t^{1-2H}; zeta(s, t) = t^{-s} + zeta(s, 1 + t).
    const double ratio = sine / near;
    const double singular = ratio * ratio * std::pow(near, 1.0 - 2.0 * hurst);
    const double regular = sine * sine * (detail::hurwitz_zeta_em(s, 1.0 + near) + detail::hurwitz_zeta_em(s, far));
    return 4.0 * normalizer * (singular + regular);
}

constexpr int kPositivityGrid = 4096;

}  // namespace

double SpectralDensity::evaluate(double t) const {
    if (!(t > 0.0 && t < 1.0)) throw DomainError("density evaluated outside (0, 1)");
    return (*this)(quad::from_left(t));
}

std::optional<std::complex<double>> SpectralDensity::closed_form_autocovariance(long) const {
    return std::nullopt;
}

// ---------------------------------------------------------------------------

double fgn_normalizer(double hurst) {
    check_hurst(hurst);
    return -riemann_zeta(-2.0 * hurst) / (2.0 * riemann_zeta(1.0 + 2.0 * hurst));
}

double fgn_autocovariance(double hurst, long k) {
    check_hurst(hurst);
    const double e = 2.0 * hurst;
    const double x = std::abs(static_cast<double>(k));
    return 0.5 * std::pow(x + 1.0, e) + 0.5 * std::pow(std::abs(x - 1.0), e) - std::pow(x, e);
}

double fgn_density_eval(double hurst, double t) {
    check_hurst(hurst);
    if (!(t > 0.0 && t < 1.0)) throw DomainError("fGn density is defined on the open interval (0, 1)");
    return fgn_value(hurst, fgn_normalizer(hurst), quad::from_left(t));
}

FgnDensity::FgnDensity(double hurst) : hurst_(hurst), normalizer_(fgn_normalizer(hurst)) {}

double FgnDensity::operator()(UnitPoint p) const { return fgn_value(hurst_, normalizer_, p); }

std::optional<std::complex<double>> FgnDensity::closed_form_autocovariance(long k) const {
    return fgn_autocovariance(hurst_, k);
}

std::string FgnDensity::describe() const {
    std::ostringstream os;
    os << "fgn(H=" << hurst_ << ")";
    return os.str();
}

// ---------------------------------------------------------------------------

BandedDensity::BandedDensity(std::vector<std::complex<double>> q) : q_(std::move(q)) {
    for (const auto& v : q_)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw DomainError("banded density: non-finite coefficient");

    std::vector<double> grid(kPositivityGrid);
    for (int i = 0; i < kPositivityGrid; ++i) grid[i] = periodic(static_cast<double>(i) / kPositivityGrid);
    double lowest = *std::min_element(grid.begin(), grid.end());

    // Refine every grid-local minimum by golden-section search on its two
    // neighbouring cells.
    const double h = 1.0 / kPositivityGrid;
    const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
    for (int i = 0; i < kPositivityGrid; ++i) {
        const double left = grid[(i + kPositivityGrid - 1) % kPositivityGrid];
        const double right = grid[(i + 1) % kPositivityGrid];
        if (grid[i] > left || grid[i] > right) continue;
        double a = (i - 1) * h, b = (i + 1) * h;
        double x1 = b - ratio * (b - a), x2 = a + ratio * (b - a);
        double f1 = periodic(x1), f2 = periodic(x2);
        for (int it = 0; it < 60; ++it) {
            if (f1 < f2) {
                b = x2; x2 = x1; f2 = f1;
                x1 = b - ratio * (b - a); f1 = periodic(x1);
            } else {
                a = x1; x1 = x2; f1 = f2;
                x2 = a + ratio * (b - a); f2 = periodic(x2);
            }
        }
        lowest = std::min({lowest, f1, f2});
    }
    min_value_ = lowest;
    if (!(min_value_ > 0.0)) {
        std::ostringstream os;
        os << "banded density is not strictly positive (minimum " << min_value_ << ")";
        throw DomainError(os.str());
    }
}

double BandedDensity::periodic(double t) const {
    double v = 1.0;
    for (std::size_t k = 0; k < q_.size(); ++k) {
        const double angle = 2.0 * std::numbers::pi * std::fmod(static_cast<double>(k + 1) * t, 1.0);
        v += 2.0 * (q_[k] * std::complex<double>(std::cos(angle), std::sin(angle))).real();
    }
    return v;
}

double BandedDensity::operator()(UnitPoint p) const {
    double v = 1.0;
    for (std::size_t k = 0; k < q_.size(); ++k)
        v += 2.0 * (q_[k] * quad::unit_phase(p, static_cast<long>(k + 1), +1)).real();
    return v;
}

double BandedDensity::evaluate(double t) const {
    if (!(t >= 0.0 && t <= 1.0)) throw DomainError("banded density evaluated outside [0, 1]");
    return (*this)(quad::from_left(t));
}

std::optional<std::complex<double>> BandedDensity::closed_form_autocovariance(long k) const {
    if (k == 0) return 1.0;
    const long m = static_cast<long>(q_.size());
    if (k > 0 && k <= m) return std::conj(q_[k - 1]);
    if (k < 0 && -k <= m) return q_[-k - 1];
    return 0.0;
}

bool BandedDensity::is_real_symmetric() const {
    return std::all_of(q_.begin(), q_.end(), [](const auto& v) { return v.imag() == 0.0; });
}

std::string BandedDensity::describe() const {
    std::ostringstream os;
    os << "banded(m=" << q_.size() << ")";
    return os.str();
}

// ---------------------------------------------------------------------------

std::complex<double> density_fourier_coefficient(const SpectralDensity& d, long k, double tol) {
    if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
    quad::Options options;
    options.tol = tol;
    const auto moments = quad::fourier_moments([&](UnitPoint p) { return d(p); }, k, k, +1, options);
    return moments.front().value;
}

SzegoConditionReport szego_condition_report(const SpectralDensity& d, double tol) {
    if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
    double lowest = std::numeric_limits<double>::infinity();
    for (int i = 0; i < kPositivityGrid; ++i)
        lowest = std::min(lowest, d(quad::from_left((i + 0.5) / kPositivityGrid)));

    quad::Options options;
    options.tol = tol;
    try {
        const auto moments =
            quad::fourier_moments([&](UnitPoint p) { return std::log(d(p)); }, 0, 0, +1, options);
        return {lowest, moments.front().value.real(), moments.front().error};
    } catch (const QuadratureError& e) {
        throw SzegoConditionError(std::string("log-integral of the density does not stabilise: ") + e.what());
    }
}

}  // namespace szego
