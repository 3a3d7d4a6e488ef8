#ifndef SZEGO_INVERSE_ASSEMBLY_HPP_
#define SZEGO_INVERSE_ASSEMBLY_HPP_

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "szego/spectral_density.hpp"
#include "szego/szego_transform.hpp"

namespace szego {

struct BlockMeta {
    std::string method;                 // "szego", "closed-form", "finite-section", "whittle"
    int truncation_order = -1;          // N of the coefficient series, if any
    double tol = 0.0;                   // quadrature tolerance behind the entries
    std::optional<int> section_size;    // m, for finite-section blocks
    std::optional<double> min_pivot;    // Cholesky min pivot, for finite-section blocks
};

// Upper-left n x n block of G^{-1} (or of an approximation to it).  Public
// indexing is 1-based, k = row, j = column.
class InverseBlock {
  public:
    InverseBlock(Eigen::MatrixXcd entries, BlockMeta meta);

    int size() const noexcept { return static_cast<int>(entries_.rows()); }
    std::complex<double> operator()(int k, int j) const;
    const Eigen::MatrixXcd& matrix() const noexcept { return entries_; }
    const BlockMeta& meta() const noexcept { return meta_; }

  private:
    Eigen::MatrixXcd entries_;
    BlockMeta meta_;
};

// (G^{-1})_{k,j} = conj(a_0) a_l + conj(a_1) a_{l+1} + ... + conj(a_{j-1}) a_{k-1},
// l = k - j, for j <= k; conjugate reflection for j > k.
std::complex<double> inverse_entry(const CoefficientSeries& psi, int k, int j);

// n x n block as L L^H with L lower-triangular Toeplitz, first column
// a_0 ... a_{n-1}.  Lower triangle computed, upper triangle reflected, so the
// result is exactly Hermitian.
InverseBlock inverse_block(const CoefficientSeries& psi, int n);

// psi(z) conj(psi(w)) / (1 - z conj(w)) with psi from the truncated series.
std::complex<double> reproducing_kernel(const CoefficientSeries& psi, std::complex<double> z,
                                        std::complex<double> w);

using Kernel = std::function<std::complex<double>(std::complex<double>, std::complex<double>)>;

// Kernel with psi = 1 / S(z), S given by a (polynomial) Szego series.
Kernel kernel_from_szego(const CoefficientSeries& szego);

struct KernelExtraction {
    double radius = 0.5;
    int samples = 64;  // per circle
};

// (G^{-1})_{k,j} as the Taylor coefficient of z^{k-1} conj(w)^{j-1} of the
// kernel, extracted by discrete Cauchy integrals on |z| = |w| = radius.
std::complex<double> inverse_entry_from_kernel(const Kernel& kernel, int k, int j,
                                               const KernelExtraction& options = {});

// Q_k(z) = a_k + a_{k-1} z + ... + a_0 z^k for k = 0..n, ascending powers.
std::vector<std::vector<std::complex<double>>> orthonormal_polynomials_Q(const CoefficientSeries& psi, int n);

enum class GramWeight { density, reciprocal_density };

// Gram matrix  int P_r(e^{2 pi i t}) conj(P_c(e^{2 pi i t})) w(t) dt  with
// w = phi or 1/phi; row r, column c.
Eigen::MatrixXcd polynomial_gram(const std::vector<std::vector<std::complex<double>>>& polys,
                                 const SpectralDensity& d, GramWeight weight, double tol);

// int_0^1 dt / phi(t).
double diagonal_limit(const SpectralDensity& d, double tol);

// Gamma_{k,j} = int e^{-2 pi i (k-j) t} / phi(t) dt.
std::complex<double> whittle_entry(const SpectralDensity& d, int k, int j, double tol);

InverseBlock whittle_matrix(const SpectralDensity& d, int n, double tol);

// Partial sums  sum_{k<n} |a_k|^2 = (G^{-1})_{n,n}  for n = 1..N+1.
std::vector<double> diagonal_partial_sums(const CoefficientSeries& psi);

// Smallest order N' <= N with  inverse_integral - sum_{k<=N'} |a_k|^2 < gap_tol,
// or nullopt if the series never gets that close.
std::optional<int> truncation_by_diagonal_gap(const CoefficientSeries& psi, double inverse_integral,
                                              double gap_tol);

// Cholesky of the block succeeds (operational positive-definiteness test).
bool is_cholesky_positive(const InverseBlock& block);

}  // namespace szego

#endif  // SZEGO_INVERSE_ASSEMBLY_HPP_
