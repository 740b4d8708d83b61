#pragma once

#include "opcheck/types.hpp"

namespace opcheck {

enum class GridLabel { Volterra, DerivativeForward, LaplacianDirichlet };

/// Matrix discretization of an integral/differential operator on (0,1),
/// nodes x_i = i*h, i = 1..grid_n, h = 1/grid_n.
struct GridOperator {
    ComplexMatrix matrix;
    int grid_n = 0;
    double h = 0;
    GridLabel label = GridLabel::Volterra;
};

/// Right-endpoint quadrature of the integral operator f -> int_0^x f:
/// V = h * (lower-triangular all-ones). sigma_min = h > 0.
GridOperator volterra_matrix(int n);

/// Backward difference D = (1/h) * (I - subdiagonal shift); the exact left
/// inverse of the right-endpoint quadrature, D * V = I.
GridOperator derivative_matrix(int n);

/// Dirichlet difference Laplacian (1/h^2) tridiag(-1, 2, -1) on the interior
/// nodes x_1..x_{n-1} of the grid with spacing h = 1/n; eigenvalues are
/// (4/h^2) sin^2(k pi h / 2), k = 1..n-1.
ComplexMatrix dirichlet_laplacian(int n);

/// Dirichlet Laplacian plus the squared Volterra operator restricted to the
/// same interior nodes; Hermitian positive definite.
ComplexMatrix schrodinger_like(int n);

struct ConvergenceRow {
    int n;
    double lambda_min_laplacian;
    double lambda_max_volterra_sq;
    double sigma_min_sum;
};

std::vector<ConvergenceRow> convergence_study(const std::vector<int>& ns);

/// CSV rendering: header + one row per grid size.
std::string convergence_csv(const std::vector<ConvergenceRow>& rows);

}  // namespace opcheck
