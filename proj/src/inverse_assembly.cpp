#include "szego/inverse_assembly.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "szego/errors.hpp"
#include "szego/parallel.hpp"

namespace szego {

namespace {

void require_psi(const CoefficientSeries& s) {
    if (s.role != SeriesRole::psi) throw DomainError("expected the coefficient series of psi = 1/S");
}

std::complex<double> lower_entry(const std::vector<std::complex<double>>& a, int k, int j) {
    // 1-based, j <= k
    const int lag = k - j;
    std::complex<double> acc = 0.0;
    for (int s = 0; s < j; ++s) acc += std::conj(a[s]) * a[lag + s];
    return acc;
}

std::complex<double> polynomial_value(const std::vector<std::complex<double>>& p, std::complex<double> z) {
    std::complex<double> acc = 0.0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * z + *it;
    return acc;
}

}  // namespace

InverseBlock::InverseBlock(Eigen::MatrixXcd entries, BlockMeta meta)
    : entries_(std::move(entries)), meta_(std::move(meta)) {
    if (entries_.rows() != entries_.cols()) throw DimensionMismatchError("InverseBlock must be square");
}

std::complex<double> InverseBlock::operator()(int k, int j) const {
    if (k < 1 || j < 1 || k > size() || j > size())
        throw OutOfRangeError("InverseBlock index out of range");
    return entries_(k - 1, j - 1);
}

std::complex<double> inverse_entry(const CoefficientSeries& psi, int k, int j) {
    require_psi(psi);
    if (k < 1 || j < 1) throw OutOfRangeError("inverse_entry indices are 1-based");
    if (std::max(k, j) > psi.order() + 1)
        throw OutOfRangeError("inverse_entry(" + std::to_string(k) + ", " + std::to_string(j) +
                              ") needs coefficients up to a_" + std::to_string(std::max(k, j) - 1) +
                              ", series has order " + std::to_string(psi.order()));
    if (j <= k) return lower_entry(psi.coeffs, k, j);
    return std::conj(lower_entry(psi.coeffs, j, k));
}

InverseBlock inverse_block(const CoefficientSeries& psi, int n) {
    require_psi(psi);
    if (n < 1) throw OutOfRangeError("block size must be positive");
    if (n > psi.order() + 1)
        throw OutOfRangeError("inverse_block(" + std::to_string(n) + ") needs a series of order " +
                              std::to_string(n - 1));
    Eigen::MatrixXcd lower = Eigen::MatrixXcd::Zero(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c <= r; ++c) lower(r, c) = psi.coeffs[r - c];
    const Eigen::MatrixXcd product = lower * lower.adjoint();
    Eigen::MatrixXcd out(n, n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < r; ++c) {
            out(r, c) = product(r, c);
            out(c, r) = std::conj(product(r, c));
        }
        out(r, r) = product(r, r).real();
    }
    return InverseBlock(std::move(out), {"szego", psi.order(), psi.source_tol, std::nullopt, std::nullopt});
}

std::complex<double> reproducing_kernel(const CoefficientSeries& psi, std::complex<double> z,
                                        std::complex<double> w) {
    require_psi(psi);
    if (!(std::abs(z) < 1.0) || !(std::abs(w) < 1.0))
        throw DomainError("reproducing_kernel requires |z| < 1 and |w| < 1");
    return evaluate_series(psi, z) * std::conj(evaluate_series(psi, w)) / (1.0 - z * std::conj(w));
}

Kernel kernel_from_szego(const CoefficientSeries& szego) {
    if (szego.role != SeriesRole::szego) throw DomainError("expected the coefficient series of S");
    return [szego](std::complex<double> z, std::complex<double> w) {
        const std::complex<double> psi_z = 1.0 / evaluate_series(szego, z);
        const std::complex<double> psi_w = 1.0 / evaluate_series(szego, w);
        return psi_z * std::conj(psi_w) / (1.0 - z * std::conj(w));
    };
}

std::complex<double> inverse_entry_from_kernel(const Kernel& kernel, int k, int j,
                                               const KernelExtraction& options) {
    if (k < 1 || j < 1) throw OutOfRangeError("indices are 1-based");
    const int m = options.samples;
    if (m <= std::max(k, j)) throw DomainError("too few samples for the requested coefficient");
    const double r = options.radius;
    if (!(r > 0.0 && r < 1.0)) throw DomainError("extraction radius must lie in (0, 1)");

    // K(z, w) = sum B_{k,j} z^{k-1} conj(w)^{j-1};  with z = r e^{i a},
    // w = r e^{i b}:  B_{k,j} r^{k+j-2} = mean K e^{-i(k-1)a} e^{+i(j-1)b}.
    std::complex<double> acc = 0.0;
    for (int p = 0; p < m; ++p) {
        const double a = 2.0 * std::numbers::pi * p / m;
        const std::complex<double> z = std::polar(r, a);
        const std::complex<double> zphase = std::polar(1.0, -(k - 1) * a);
        for (int q = 0; q < m; ++q) {
            const double b = 2.0 * std::numbers::pi * q / m;
            const std::complex<double> w = std::polar(r, b);
            acc += kernel(z, w) * zphase * std::polar(1.0, (j - 1) * b);
        }
    }
    return acc / (static_cast<double>(m) * m * std::pow(r, k + j - 2));
}

std::vector<std::vector<std::complex<double>>> orthonormal_polynomials_Q(const CoefficientSeries& psi, int n) {
    require_psi(psi);
    if (n < 0 || n > psi.order()) throw OutOfRangeError("orthonormal_polynomials_Q: n exceeds series order");
    std::vector<std::vector<std::complex<double>>> out;
    out.reserve(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        std::vector<std::complex<double>> p(static_cast<std::size_t>(k) + 1);
        for (int power = 0; power <= k; ++power) p[power] = psi.coeffs[k - power];
        out.push_back(std::move(p));
    }
    return out;
}

Eigen::MatrixXcd polynomial_gram(const std::vector<std::vector<std::complex<double>>>& polys,
                                 const SpectralDensity& d, GramWeight weight, double tol) {
    const int n = static_cast<int>(polys.size());
    std::size_t degree = 0;
    for (const auto& p : polys) degree = std::max(degree, p.size());
    quad::Options options;
    options.tol = tol;
    Eigen::MatrixXcd gram(n, n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c <= r; ++c) {
            const auto integrand = [&](UnitPoint p) -> std::complex<double> {
                const std::complex<double> z = quad::unit_phase(p, 1, +1);
                const double phi = d(p);
                const double w = weight == GramWeight::density ? phi : 1.0 / phi;
                return polynomial_value(polys[r], z) * std::conj(polynomial_value(polys[c], z)) * w;
            };
            const auto e = quad::integrate(integrand, options, static_cast<int>(2 * degree + 16));
            gram(r, c) = e.value;
            gram(c, r) = std::conj(e.value);
        }
    }
    return gram;
}

double diagonal_limit(const SpectralDensity& d, double tol) {
    if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
    quad::Options options;
    options.tol = tol;
    return quad::fourier_moments([&](UnitPoint p) { return 1.0 / d(p); }, 0, 0, -1, options)
        .front()
        .value.real();
}

std::complex<double> whittle_entry(const SpectralDensity& d, int k, int j, double tol) {
    if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
    quad::Options options;
    options.tol = tol;
    return quad::fourier_moments([&](UnitPoint p) { return 1.0 / d(p); }, k - j, k - j, -1, options)
        .front()
        .value;
}

InverseBlock whittle_matrix(const SpectralDensity& d, int n, double tol) {
    if (n < 1) throw OutOfRangeError("block size must be positive");
    if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
    quad::Options options;
    options.tol = tol;
    // moments[l] = Gamma for lag k - j = l, l = 0 .. n-1
    auto moments = quad::fourier_moments([&](UnitPoint p) { return 1.0 / d(p); }, 0, n - 1, -1, options);
    if (d.is_real_symmetric())
        for (auto& m : moments) m.value = m.value.real();
    Eigen::MatrixXcd out(n, n);
    for (int r = 0; r < n; ++r) {
        out(r, r) = moments[0].value.real();
        for (int c = 0; c < r; ++c) {
            out(r, c) = moments[r - c].value;
            out(c, r) = std::conj(moments[r - c].value);
        }
    }
    return InverseBlock(std::move(out), {"whittle", -1, tol, std::nullopt, std::nullopt});
}

std::vector<double> diagonal_partial_sums(const CoefficientSeries& psi) {
    require_psi(psi);
    std::vector<double> out;
    out.reserve(psi.coeffs.size());
    double acc = 0.0;
    for (const auto& a : psi.coeffs) {
        acc += std::norm(a);
        out.push_back(acc);
    }
    return out;
}

std::optional<int> truncation_by_diagonal_gap(const CoefficientSeries& psi, double inverse_integral,
                                              double gap_tol) {
    const auto sums = diagonal_partial_sums(psi);
    for (std::size_t n = 0; n < sums.size(); ++n)
        if (inverse_integral - sums[n] < gap_tol) return static_cast<int>(n);
    return std::nullopt;
}

bool is_cholesky_positive(const InverseBlock& block) {
    Eigen::LLT<Eigen::MatrixXcd> llt(block.matrix());
    return llt.info() == Eigen::Success;
}

}  // namespace szego
