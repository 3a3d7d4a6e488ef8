#ifndef SZEGO_BANDED_CLOSED_FORM_HPP_
#define SZEGO_BANDED_CLOSED_FORM_HPP_

#include <complex>
#include <span>

#include "szego/inverse_assembly.hpp"
#include "szego/szego_transform.hpp"

namespace szego {

// Tridiagonal density phi(t) = 1 + q e^{2 pi i t} + conj(q) e^{-2 pi i t},
// |q| < 1/2.  S(z) = c0 + (q/c0) z with c0 = sqrt((1 + sqrt(1 - 4|q|^2)) / 2).
class TridiagonalSpec {
  public:
    explicit TridiagonalSpec(std::complex<double> q);

    std::complex<double> q() const noexcept { return q_; }
    double c0() const noexcept { return c0_; }

  private:
    std::complex<double> q_;
    double c0_;
};

// (G^{-1})_{k,j} = (-1)^{j+k} c0^{2(1-k-j)} q^{k-j} (c0^{4j} - |q|^{2j}) / (c0^4 - |q|^2)
// for j <= k, conjugate reflection otherwise.
std::complex<double> tridiagonal_inverse_entry(const TridiagonalSpec& spec, int k, int j);

InverseBlock tridiagonal_inverse_block(const TridiagonalSpec& spec, int n);

// a_n = (-1)^n q^n / c0^{2n+1}.
CoefficientSeries tridiagonal_psi_coefficients(const TridiagonalSpec& spec, int order);

// c = [c0, q/c0, 0, ...] padded to the given order.
CoefficientSeries tridiagonal_szego_coefficients(const TridiagonalSpec& spec, int order);

struct PentadiagonalCoefficients {
    double c0;
    std::complex<double> c1;
    std::complex<double> c2;
};

// c1 = c0 (c0^2 q1 - q2 conj(q1)) / (c0^4 - |q2|^2),  c2 = q2 / c0.
// c0 = exp(1/2 int log phi) must come from quadrature.
PentadiagonalCoefficients pentadiagonal_szego_coefficients(std::complex<double> q1, std::complex<double> q2,
                                                           double c0);

struct ConjectureCheck {
    bool is_polynomial_degree_m = false;
    double max_tail_coefficient = 0.0;  // max |c_k|, k > m
    int band_order = 0;
    CoefficientSeries szego;
};

// Runs the general pipeline for BandedDensity(q) to order N with quadrature
// tolerance tol / 100 and tests whether S is a polynomial of degree m.
ConjectureCheck polynomial_conjecture_check(std::span<const std::complex<double>> q, int order, double tol);

// Defaults: N = 4m + 16, quadrature tolerance 1e-12, tol = 100 x that.
ConjectureCheck polynomial_conjecture_check(std::span<const std::complex<double>> q);

}  // namespace szego

#endif  // SZEGO_BANDED_CLOSED_FORM_HPP_
