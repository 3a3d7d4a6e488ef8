#include "szego/quadrature.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "szego/errors.hpp"
#include "szego/parallel.hpp"

namespace szego::quad {

namespace {

constexpr unsigned kLowOrder = 20;
constexpr unsigned kHighOrder = 40;

struct Rule {
    std::vector<double> nodes;    // on [-1, 1]
    std::vector<double> weights;
};

// Boost stores the non-negative half of a symmetric rule.
template <unsigned N>
Rule make_rule() {
    using G = boost::math::quadrature::gauss<double, N>;
    const auto& x = G::abscissa();
    const auto& w = G::weights();
    Rule r;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0.0) {
            r.nodes.push_back(0.0);
            r.weights.push_back(w[i]);
            continue;
        }
        r.nodes.push_back(-x[i]);
        r.weights.push_back(w[i]);
        r.nodes.push_back(x[i]);
        r.weights.push_back(w[i]);
    }
    return r;
}

const Rule& low_rule() {
    static const Rule r = make_rule<kLowOrder>();
    return r;
}

const Rule& high_rule() {
    static const Rule r = make_rule<kHighOrder>();
    return r;
}

// Panel in its own coordinate: t for the left half, s = 1 - t for the right.
struct Panel {
    double lo, hi;
    bool right;
};

void append_nodes(const Panel& p, const Rule& rule, std::vector<UnitPoint>& points,
                  std::vector<double>& weights) {
    const double half = 0.5 * (p.hi - p.lo);
    const double mid = 0.5 * (p.hi + p.lo);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double x = mid + half * rule.nodes[i];
        points.push_back(p.right ? from_right(x) : from_left(x));
        weights.push_back(half * rule.weights[i]);
    }
}

template <class F>
double panel_mass(const F& f, const Panel& p) {
    std::vector<UnitPoint> pts;
    std::vector<double> w;
    append_nodes(p, high_rule(), pts, w);
    double mass = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) mass += w[i] * std::abs(f(pts[i]));
    return mass;
}

void check_finite(double v, const UnitPoint& p) {
    if (!std::isfinite(v))
        throw QuadratureError("non-finite integrand value at t = " + std::to_string(p.t),
                              std::numeric_limits<double>::infinity());
}

template <class Value, class F>
Sampled<Value> sample_impl(const F& f, int panels, const Options& options) {
    panels = std::max(2, panels + (panels % 2));
    const double h = 1.0 / panels;
    std::vector<Panel> layout;
    for (int i = 1; i < panels / 2; ++i) {
        layout.push_back({i * h, (i + 1) * h, false});
        layout.push_back({i * h, (i + 1) * h, true});
    }

    Sampled<Value> out;
    out.panels = panels;
    const double remainder_bound = 1e-2 * options.tol;
    for (bool right : {false, true}) {
        double w = h;
        for (int level = 1;; ++level) {
            layout.push_back({0.5 * w, w, right});
            w *= 0.5;
            if (level < options.min_grading_levels) continue;
            const Panel rest{0.0, w, right};
            const double mass = panel_mass(f, rest);
            if (mass < remainder_bound || level >= options.max_grading_levels || w < 1e-290) {
                layout.push_back(rest);
                out.remainder_mass += mass;
                break;
            }
        }
    }

    for (const Panel& p : layout) {
        append_nodes(p, low_rule(), out.low_points, out.low_weights);
        append_nodes(p, high_rule(), out.high_points, out.high_weights);
    }
    out.low_values.resize(out.low_points.size());
    out.high_values.resize(out.high_points.size());
    parallel_for(out.low_points.size(), [&](std::size_t i) { out.low_values[i] = f(out.low_points[i]); });
    parallel_for(out.high_points.size(), [&](std::size_t i) { out.high_values[i] = f(out.high_points[i]); });
    for (std::size_t i = 0; i < out.low_values.size(); ++i)
        check_finite(std::abs(out.low_values[i]), out.low_points[i]);
    for (std::size_t i = 0; i < out.high_values.size(); ++i)
        check_finite(std::abs(out.high_values[i]), out.high_points[i]);
    return out;
}

}  // namespace

Sampled<double> sample(const RealIntegrand& f, int panels, const Options& options) {
    return sample_impl<double>(f, panels, options);
}

Sampled<std::complex<double>> sample(const ComplexIntegrand& f, int panels, const Options& options) {
    return sample_impl<std::complex<double>>(f, panels, options);
}

std::complex<double> unit_phase(UnitPoint p, long k, int sign) {
    // k * t mod 1, taken from the smaller of t and 1 - t.
    const double cycles = p.t <= 0.5 ? std::fmod(static_cast<double>(k) * p.t, 1.0)
                                     : -std::fmod(static_cast<double>(k) * p.complement, 1.0);
    const double angle = sign * 2.0 * std::numbers::pi * cycles;
    return {std::cos(angle), std::sin(angle)};
}

Estimate fourier_moment(const Sampled<double>& s, long k, int sign) {
    std::complex<double> low = 0.0, high = 0.0;
    for (std::size_t i = 0; i < s.low_points.size(); ++i)
        low += s.low_weights[i] * s.low_values[i] * unit_phase(s.low_points[i], k, sign);
    for (std::size_t i = 0; i < s.high_points.size(); ++i)
        high += s.high_weights[i] * s.high_values[i] * unit_phase(s.high_points[i], k, sign);
    return {high, std::abs(high - low) + s.remainder_mass};
}

Estimate integrate_sampled(const Sampled<std::complex<double>>& s) {
    std::complex<double> low = 0.0, high = 0.0;
    for (std::size_t i = 0; i < s.low_points.size(); ++i) low += s.low_weights[i] * s.low_values[i];
    for (std::size_t i = 0; i < s.high_points.size(); ++i) high += s.high_weights[i] * s.high_values[i];
    return {high, std::abs(high - low) + s.remainder_mass};
}

std::vector<Estimate> fourier_moments(const RealIntegrand& f, long k_first, long k_last, int sign,
                                      const Options& options) {
    if (k_last < k_first) return {};
    const long k_max = std::max(std::abs(k_first), std::abs(k_last));
    int panels = static_cast<int>(std::max<long>(options.min_panels, k_max + 16));
    double best = std::numeric_limits<double>::infinity();
    for (; panels <= options.max_panels; panels *= 2) {
        const Sampled<double> s = sample(f, panels, options);
        if (s.remainder_mass > options.tol)
            throw QuadratureError("endpoint grading did not converge", s.remainder_mass);
        std::vector<Estimate> out(static_cast<std::size_t>(k_last - k_first + 1));
        parallel_for(out.size(), [&](std::size_t i) {
            out[i] = fourier_moment(s, k_first + static_cast<long>(i), sign);
        }, 4);
        double worst = 0.0;
        for (const Estimate& e : out) worst = std::max(worst, e.error);
        if (worst <= options.tol) return out;
        best = std::min(best, worst);
    }
    throw QuadratureError("Fourier quadrature did not reach tolerance", best);
}

Estimate integrate(const ComplexIntegrand& f, const Options& options, int initial_panels) {
    int panels = std::max(options.min_panels, initial_panels);
    double best = std::numeric_limits<double>::infinity();
    for (; panels <= options.max_panels; panels *= 2) {
        const auto s = sample(f, panels, options);
        if (s.remainder_mass > options.tol)
            throw QuadratureError("endpoint grading did not converge", s.remainder_mass);
        const Estimate e = integrate_sampled(s);
        if (e.error <= options.tol) return e;
        best = std::min(best, e.error);
    }
    throw QuadratureError("quadrature did not reach tolerance", best);
}

}  // namespace szego::quad
