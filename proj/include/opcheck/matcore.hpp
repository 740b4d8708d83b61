#pragma once

#include <tuple>
#include <utility>

#include "opcheck/types.hpp"

namespace opcheck {

// ---- carrier arithmetic ----

ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix sub(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix mul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix scale(const ComplexMatrix& a, Complex s);
ComplexMatrix adjoint(const ComplexMatrix& a);
double frobenius_norm(const ComplexMatrix& a);
/// Largest singular value.
double op_norm(const ComplexMatrix& a);

ComplexVector mat_vec(const ComplexMatrix& a, const ComplexVector& x);
/// <x, y> with conjugation on the second argument, so <Ax, x> is
/// inner(mat_vec(A, x), x).
Complex inner(const ComplexVector& x, const ComplexVector& y);
double vec_norm(const ComplexVector& x);

/// (M + M*)/2. Applied to every Hermitian result before it leaves the kernel.
ComplexMatrix symmetrize(const ComplexMatrix& m);

bool is_hermitian_within(const ComplexMatrix& m, double tol_rel);

// ---- spectral calculus ----

/// Cyclic complex Jacobi eigensolver for Hermitian matrices. Eigenvalues
/// ascending; deterministic for identical input bits.
/// Convergence: off-diagonal Frobenius mass < 1e-13 * ||M||_F, hard cap 40 sweeps.
HermEigen hermitian_eigh(const ComplexMatrix& m, const Tolerances& tol = {});

enum class HermFunc { Sqrt, Pow, Exp, Ln, Cos, Sin };

/// U diag(f(lambda)) U* for Hermitian m. Sqrt/Pow clamp round-off-negative
/// eigenvalues in [-tol_psd*||m||, 0) to zero; Ln requires positive definite.
ComplexMatrix func_hermitian(const ComplexMatrix& m, HermFunc f,
                             double pow_exponent = 0.0, const Tolerances& tol = {});

/// |M| = sqrt(M* M).
ComplexMatrix matrix_abs(const ComplexMatrix& m, const Tolerances& tol = {});

/// (Re T, Im T) with Re T = (T+T*)/2, Im T = (T-T*)/2i; both Hermitian.
std::pair<ComplexMatrix, ComplexMatrix> cartesian_parts(const ComplexMatrix& t);

/// Loewner comparison A <= B, decided on lambda_min(B - A) with a guard band.
Verdict loewner_leq(const ComplexMatrix& a, const ComplexMatrix& b, const Tolerances& tol = {});

double min_singular_value(const ComplexMatrix& m, const Tolerances& tol = {});

/// Three-valued invertibility on sigma_min/sigma_max with guard band;
/// the zero matrix is IsFalse.
Verdict is_invertible(const ComplexMatrix& m, const Tolerances& tol = {});

/// Gaussian elimination with partial pivoting. Requires is_invertible IsTrue.
ComplexMatrix inverse(const ComplexMatrix& m, const Tolerances& tol = {});

/// 2n x 2n assembly [[A,B],[C,D]].
ComplexMatrix block2x2(const ComplexMatrix& a, const ComplexMatrix& b,
                       const ComplexMatrix& c, const ComplexMatrix& d);
std::tuple<ComplexMatrix, ComplexMatrix, ComplexMatrix, ComplexMatrix>
block_split(const ComplexMatrix& t);

struct ClassifyFlags {
    bool hermitian = false;
    bool positive = false;
    bool normal = false;
    bool unitary = false;
};

ClassifyFlags classify(const ComplexMatrix& m, const Tolerances& tol = {});

/// Normality test via commutation of the Cartesian parts; must agree with the
/// classify() route outside the tolerance band.
bool normal_via_cartesian(const ComplexMatrix& m, const Tolerances& tol = {});

}  // namespace opcheck
