#ifndef SZEGO_ORACLE_VALIDATION_HPP_
#define SZEGO_ORACLE_VALIDATION_HPP_

// Finite-section oracle: the m x m section of G inverted by Cholesky.  For
// densities with a closed-form autocovariance (fGn, banded) the section is
// built from that closed form, so the oracle never touches the quadrature
// stack.

#include <Eigen/Dense>
#include <complex>
#include <functional>

#include "szego/inverse_assembly.hpp"
#include "szego/spectral_density.hpp"

namespace szego {

using Autocovariance = std::function<std::complex<double>(long)>;

// g_{k,j} = gamma(j - k), k, j = 1..m.  Only gamma(l), l >= 0, is queried;
// gamma(-l) = conj(gamma(l)).
Eigen::MatrixXcd finite_section_matrix(const Autocovariance& gamma, int m);

// Uses the closed-form autocovariance when available, otherwise
// density_fourier_coefficient at tolerance tol.
Eigen::MatrixXcd finite_section_matrix(const SpectralDensity& d, int m, double tol = 1e-12);

// Upper-left n x n block of M^{-1} via Cholesky and triangular solves.
// Throws NotPositiveDefiniteError when a pivot is not positive.
InverseBlock finite_section_inverse_block(const Eigen::MatrixXcd& section, int n);

struct OracleReport {
    int m = 0;  // section size of the second block, 0 if unknown
    int n = 0;
    double max_abs_diff = 0.0;
    double frobenius_diff = 0.0;
    double cholesky_min_pivot = 0.0;  // 0 if neither block came from a section
};

OracleReport compare_blocks(const InverseBlock& a, const InverseBlock& b);

}  // namespace szego

#endif  // SZEGO_ORACLE_VALIDATION_HPP_
