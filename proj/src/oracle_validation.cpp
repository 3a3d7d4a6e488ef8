#include "szego/oracle_validation.hpp"

#include <string>
#include <vector>

#include "szego/errors.hpp"
#include "szego/parallel.hpp"

namespace szego {

Eigen::MatrixXcd finite_section_matrix(const Autocovariance& gamma, int m) {
    if (m < 1) throw OutOfRangeError("section size must be positive");
    std::vector<std::complex<double>> lags(static_cast<std::size_t>(m));
    for (int l = 0; l < m; ++l) lags[l] = gamma(l);
    Eigen::MatrixXcd g(m, m);
    parallel_for(static_cast<std::size_t>(m), [&](std::size_t row) {
        const int k = static_cast<int>(row);
        for (int j = 0; j < m; ++j) g(k, j) = j >= k ? lags[j - k] : std::conj(lags[k - j]);
    }, 16);
    for (int k = 0; k < m; ++k) g(k, k) = g(k, k).real();
    return g;
}

Eigen::MatrixXcd finite_section_matrix(const SpectralDensity& d, int m, double tol) {
    if (d.closed_form_autocovariance(0))
        return finite_section_matrix([&](long l) { return *d.closed_form_autocovariance(l); }, m);
    return finite_section_matrix([&](long l) { return density_fourier_coefficient(d, l, tol); }, m);
}

InverseBlock finite_section_inverse_block(const Eigen::MatrixXcd& section, int n) {
    const int m = static_cast<int>(section.rows());
    if (section.cols() != m) throw DimensionMismatchError("finite section must be square");
    if (n < 1 || n > m) throw OutOfRangeError("block size must lie in [1, m]");

    Eigen::LLT<Eigen::MatrixXcd> llt(section);
    const Eigen::MatrixXcd lower = llt.matrixL();
    double min_pivot = std::numeric_limits<double>::infinity();
    for (int i = 0; i < m; ++i) min_pivot = std::min(min_pivot, std::norm(lower(i, i)));
    if (llt.info() != Eigen::Success || !(min_pivot > 0.0))
        throw NotPositiveDefiniteError("finite section is not positive definite (Cholesky failed)",
                                       llt.info() == Eigen::Success ? min_pivot : 0.0);

    const Eigen::MatrixXcd rhs = Eigen::MatrixXcd::Identity(m, n);
    const Eigen::MatrixXcd columns = llt.solve(rhs);
    return InverseBlock(columns.topRows(n), {"finite-section", -1, 0.0, m, min_pivot});
}

OracleReport compare_blocks(const InverseBlock& a, const InverseBlock& b) {
    if (a.size() != b.size())
        throw DimensionMismatchError("compare_blocks: sizes " + std::to_string(a.size()) + " and " +
                                     std::to_string(b.size()) + " differ");
    const Eigen::MatrixXcd diff = a.matrix() - b.matrix();
    OracleReport r;
    r.n = a.size();
    r.m = b.meta().section_size.value_or(a.meta().section_size.value_or(0));
    r.max_abs_diff = diff.cwiseAbs().maxCoeff();
    r.frobenius_diff = diff.norm();
    r.cholesky_min_pivot = b.meta().min_pivot.value_or(a.meta().min_pivot.value_or(0.0));
    return r;
}

}  // namespace szego
