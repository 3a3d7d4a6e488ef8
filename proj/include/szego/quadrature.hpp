#ifndef SZEGO_QUADRATURE_HPP_
#define SZEGO_QUADRATURE_HPP_

// Composite Gauss-Legendre quadrature on the open interval (0, 1).
//
// Layout: an even number P of uniform panels; the two panels touching t = 0
// and t = 1 are replaced by dyadically graded pieces [w/2, w] that continue
// towards the endpoint until the absolute mass of the integrand on the
// remaining piece [0, w] drops below tol / 100.  This resolves the integrable
// logarithmic and power-law endpoint singularities of the fGn density and of
// its logarithm without density-specific code.  Each panel is integrated with
// a 20-point and a 40-point rule; their difference is the error estimate.
//
// Points on the right half carry the exact complement 1 - t, so grading
// towards t = 1 is not limited by the spacing of doubles near 1.

#include <complex>
#include <functional>
#include <vector>

namespace szego::quad {

struct UnitPoint {
    double t;
    double complement;  // 1 - t, accurate even when t is close to 1
};

inline UnitPoint from_left(double t) { return {t, 1.0 - t}; }
inline UnitPoint from_right(double s) { return {1.0 - s, s}; }

struct Options {
    double tol = 1e-10;  // absolute
    int min_panels = 16;
    int max_panels = 1 << 14;
    int min_grading_levels = 40;
    int max_grading_levels = 1000;
};

struct Estimate {
    std::complex<double> value;
    double error;
};

template <class Value>
struct Sampled {
    std::vector<UnitPoint> low_points, high_points;
    std::vector<double> low_weights, high_weights;
    std::vector<Value> low_values, high_values;
    double remainder_mass = 0.0;  // mass left on the innermost graded pieces
    int panels = 0;
};

using RealIntegrand = std::function<double(UnitPoint)>;
using ComplexIntegrand = std::function<std::complex<double>(UnitPoint)>;

Sampled<double> sample(const RealIntegrand& f, int panels, const Options& options);
Sampled<std::complex<double>> sample(const ComplexIntegrand& f, int panels, const Options& options);

// e^{sign * 2 pi i k t}, reduced using whichever of t, 1 - t is smaller.
std::complex<double> unit_phase(UnitPoint p, long k, int sign);

// Integral of f(t) e^{sign * 2 pi i k t} over (0,1) from existing samples.
Estimate fourier_moment(const Sampled<double>& s, long k, int sign);

Estimate integrate_sampled(const Sampled<std::complex<double>>& s);

// Fourier moments for every k in [k_first, k_last], all from one node set.
// Refines the uniform panels until every moment meets options.tol; throws
// QuadratureError otherwise.
std::vector<Estimate> fourier_moments(const RealIntegrand& f, long k_first, long k_last, int sign,
                                      const Options& options);

// Plain integral of a complex integrand.  initial_panels <= 0 uses the
// options minimum.
Estimate integrate(const ComplexIntegrand& f, const Options& options, int initial_panels = 0);

}  // namespace szego::quad

#endif  // SZEGO_QUADRATURE_HPP_
