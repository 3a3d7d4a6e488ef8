#ifndef SZEGO_SZEGO_TRANSFORM_HPP_
#define SZEGO_SZEGO_TRANSFORM_HPP_

#include <complex>
#include <vector>

#include "szego/spectral_density.hpp"

namespace szego {

// u_0 = -1/2 int log phi,  u_k = -int e^{-2 pi i k t} log phi  (k >= 1).
// log psi(z) = sum_k u_k z^k; the Szego function uses v_k = -u_k.
struct LogFourierCoeffs {
    std::vector<std::complex<double>> u;
    double quad_tol = 0.0;
    double max_error_estimate = 0.0;

    int order() const noexcept { return static_cast<int>(u.size()) - 1; }
};

enum class SeriesRole { psi, szego };

// Taylor prefix of psi = 1/S (role psi, coefficients a_n) or of S (role
// szego, coefficients c_n).
struct CoefficientSeries {
    std::vector<std::complex<double>> coeffs;
    SeriesRole role = SeriesRole::psi;
    double source_tol = 0.0;

    int order() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
    std::complex<double> operator[](std::size_t n) const { return coeffs[n]; }
};

// Throws SzegoConditionError if int log phi diverges, QuadratureError if a
// coefficient cannot be resolved to tol.
LogFourierCoeffs log_fourier_coefficients(const SpectralDensity& d, int order, double tol);

// a_0 = e^{u_0},  a_{n+1} = 1/(n+1) sum_{k=0..n} (k+1) u_{k+1} a_{n-k}.
CoefficientSeries psi_coefficients(const LogFourierCoeffs& u, int order);

// Same recursion with v_k = -u_k and c_0 = e^{-u_0}.
CoefficientSeries szego_coefficients(const LogFourierCoeffs& u, int order);

// max_n | sum_{k<=n} a_k c_{n-k} - delta_{n0} |.
double series_reciprocal_residual(const CoefficientSeries& psi, const CoefficientSeries& szego);

// Truncated power series at z (Horner).
std::complex<double> evaluate_series(const CoefficientSeries& s, std::complex<double> z);

// S(z) = exp( 1/2 int (e^{2 pi i t} + z)/(e^{2 pi i t} - z) log phi dt ) by
// quadrature; |z| < 1.
std::complex<double> szego_eval_integral(const SpectralDensity& d, std::complex<double> z, double tol);

struct SzegoPipeline {
    LogFourierCoeffs u;
    CoefficientSeries psi;
    CoefficientSeries szego;
};

SzegoPipeline run_pipeline(const SpectralDensity& d, int order, double tol);

}  // namespace szego

#endif  // SZEGO_SZEGO_TRANSFORM_HPP_
