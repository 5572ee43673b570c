#include "slgal/polynomial.hpp"

#include <Eigen/Eigenvalues>

namespace slgal {

std::vector<Complex> roots(const ComplexPoly& p) {
    const int n = p.degree();
    if (n <= 0) return {};
    const auto& c = p.coeffs();
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) companion(i, n - 1) = -c[static_cast<std::size_t>(i)] / c.back();
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    std::vector<Complex> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
    return out;
}

}  // namespace slgal
