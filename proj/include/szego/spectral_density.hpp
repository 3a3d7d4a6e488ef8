#ifndef SZEGO_SPECTRAL_DENSITY_HPP_
#define SZEGO_SPECTRAL_DENSITY_HPP_

#include <complex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "szego/quadrature.hpp"

namespace szego {

using quad::UnitPoint;

// A spectral density phi >= 0 on the unit interval.  Its Fourier coefficients
//   gamma(k) = int_0^1 e^{2 pi i k t} phi(t) dt
// are the entries g_{k,j} = gamma(j - k) of the Hermitian Toeplitz matrix G.
// Implementations are immutable; evaluation is thread-safe.
class SpectralDensity {
  public:
    virtual ~SpectralDensity() = default;

    // phi at a point given together with its exact complement 1 - t.
    virtual double operator()(UnitPoint p) const = 0;

    // phi(t); throws DomainError where the density is not defined.
    virtual double evaluate(double t) const;

    // Degree m when phi is a trigonometric polynomial (2m+1 diagonals).
    virtual std::optional<int> band_order() const { return std::nullopt; }

    // gamma(k) when a closed form is known.
    virtual std::optional<std::complex<double>> closed_form_autocovariance(long k) const;

    // phi(t) == phi(1 - t), equivalently all gamma(k) real.
    virtual bool is_real_symmetric() const = 0;

    virtual std::string describe() const = 0;
};

// Fractional Gaussian noise with Hurst index H in (0, 1),
//   phi_H(t) = 4 C(H) sin^2(pi t) (zeta(2H+1, t) + zeta(2H+1, 1-t)).
class FgnDensity final : public SpectralDensity {
  public:
    explicit FgnDensity(double hurst);

    double hurst() const noexcept { return hurst_; }
    double normalizer() const noexcept { return normalizer_; }

    double operator()(UnitPoint p) const override;
    std::optional<std::complex<double>> closed_form_autocovariance(long k) const override;
    bool is_real_symmetric() const override { return true; }
    std::string describe() const override;

  private:
    double hurst_;
    double normalizer_;
};

// phi(t) = 1 + sum_{k=1..m} (q_k e^{2 pi i k t} + conj(q_k) e^{-2 pi i k t}).
// Construction rejects densities that are not strictly positive on [0, 1].
// With this phi, gamma(k) = conj(q_k) for 1 <= k <= m.
class BandedDensity final : public SpectralDensity {
  public:
    explicit BandedDensity(std::vector<std::complex<double>> q);

    std::span<const std::complex<double>> q() const noexcept { return q_; }
    int order() const noexcept { return static_cast<int>(q_.size()); }
    // Minimum of phi located at construction (grid plus local refinement).
    double min_value() const noexcept { return min_value_; }

    double operator()(UnitPoint p) const override;
    double evaluate(double t) const override;
    std::optional<int> band_order() const override { return order(); }
    std::optional<std::complex<double>> closed_form_autocovariance(long k) const override;
    bool is_real_symmetric() const override;
    std::string describe() const override;

  private:
    double periodic(double t) const;

    std::vector<std::complex<double>> q_;
    double min_value_ = 0.0;
};

// C(H) = -zeta(-2H) / (2 zeta(1 + 2H)).
double fgn_normalizer(double hurst);

// gamma(k) = |k+1|^{2H}/2 + |k-1|^{2H}/2 - |k|^{2H}.
double fgn_autocovariance(double hurst, long k);

// phi_H(t) for 0 < t < 1.
double fgn_density_eval(double hurst, double t);

// int_0^1 e^{2 pi i k t} phi(t) dt to absolute error tol.
std::complex<double> density_fourier_coefficient(const SpectralDensity& d, long k, double tol);

struct SzegoConditionReport {
    double min_sampled_density;
    double log_integral;  // int_0^1 log phi
    double error_estimate;
};

// Throws SzegoConditionError when int log phi does not stabilise.
SzegoConditionReport szego_condition_report(const SpectralDensity& d, double tol);

}  // namespace szego

#endif  // SZEGO_SPECTRAL_DENSITY_HPP_
