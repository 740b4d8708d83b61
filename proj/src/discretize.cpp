#include "opcheck/discretize.hpp"

#include <sstream>

#include "opcheck/matcore.hpp"

namespace opcheck {

namespace {

ComplexMatrix lower_ones_scaled(int dim, double h) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j <= i; ++j) m(i, j) = h;
    return m;
}

}  // namespace

GridOperator volterra_matrix(int n) {
    if (n < 2) throw KernelError(ErrorKind::InvalidArgument, "volterra_matrix: n must be >= 2");
    const double h = 1.0 / n;
    return {lower_ones_scaled(n, h), n, h, GridLabel::Volterra};
}

GridOperator derivative_matrix(int n) {
    if (n < 2) throw KernelError(ErrorKind::InvalidArgument, "derivative_matrix: n must be >= 2");
    const double h = 1.0 / n;
    ComplexMatrix d(n);
    for (int i = 0; i < n; ++i) {
        d(i, i) = n;
        if (i > 0) d(i, i - 1) = -static_cast<double>(n);
    }
    return {std::move(d), n, h, GridLabel::DerivativeForward};
}

ComplexMatrix dirichlet_laplacian(int n) {
    if (n < 8) throw KernelError(ErrorKind::InvalidArgument, "dirichlet_laplacian: n too small");
    const int m = n - 1;  // interior nodes only (f(0) = f(1) = 0)
    const double inv_h2 = static_cast<double>(n) * n;
    ComplexMatrix l(m);
    for (int i = 0; i < m; ++i) {
        l(i, i) = 2.0 * inv_h2;
        if (i > 0) l(i, i - 1) = -inv_h2;
        if (i + 1 < m) l(i, i + 1) = -inv_h2;
    }
    return l;
}

ComplexMatrix schrodinger_like(int n) {
    if (n < 8) throw KernelError(ErrorKind::InvalidArgument, "schrodinger_like: n too small");
    const int m = n - 1;
    const ComplexMatrix v = lower_ones_scaled(m, 1.0 / n);
    return symmetrize(add(dirichlet_laplacian(n), mul(adjoint(v), v)));
}

std::vector<ConvergenceRow> convergence_study(const std::vector<int>& ns) {
    std::vector<ConvergenceRow> rows;
    int prev = 0;
    for (int n : ns) {
        if (n < 8) throw KernelError(ErrorKind::InvalidArgument, "convergence_study: n too small");
        if (n <= prev)
            throw KernelError(ErrorKind::InvalidArgument, "convergence_study: ns must ascend");
        prev = n;
        ConvergenceRow row{};
        row.n = n;
        row.lambda_min_laplacian =
            hermitian_eigh(dirichlet_laplacian(n)).eigenvalues.front();
        const GridOperator v = volterra_matrix(n);
        row.lambda_max_volterra_sq =
            hermitian_eigh(symmetrize(mul(adjoint(v.matrix), v.matrix))).eigenvalues.back();
        row.sigma_min_sum = min_singular_value(schrodinger_like(n));
        rows.push_back(row);
    }
    return rows;
}

std::string convergence_csv(const std::vector<ConvergenceRow>& rows) {
    std::ostringstream out;
    out.precision(17);
    out << "n,lambda_min_laplacian,lambda_max_volterra_sq,sigma_min_sum\n";
    for (const auto& r : rows)
        out << r.n << ',' << r.lambda_min_laplacian << ',' << r.lambda_max_volterra_sq
            << ',' << r.sigma_min_sum << '\n';
    return out.str();
}

}  // namespace opcheck
