#include "opcheck/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <tuple>

namespace opcheck {

namespace {

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim())
        throw KernelError(ErrorKind::DimensionMismatch, "matrix dimensions differ");
}

void require_finite(double x) {
    if (!std::isfinite(x))
        throw KernelError(ErrorKind::InvalidArgument, "non-finite entry");
}

}  // namespace

ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b);
    ComplexMatrix r(a.dim());
    for (size_t k = 0; k < a.data().size(); ++k) r.data()[k] = a.data()[k] + b.data()[k];
    return r;
}

ComplexMatrix sub(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b);
    ComplexMatrix r(a.dim());
    for (size_t k = 0; k < a.data().size(); ++k) r.data()[k] = a.data()[k] - b.data()[k];
    return r;
}

ComplexMatrix mul(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b);
    const int n = a.dim();
    ComplexMatrix r(n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const Complex aik = a(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
        }
    }
    return r;
}

ComplexMatrix scale(const ComplexMatrix& a, Complex s) {
    ComplexMatrix r(a.dim());
    for (size_t k = 0; k < a.data().size(); ++k) r.data()[k] = a.data()[k] * s;
    return r;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
    const int n = a.dim();
    ComplexMatrix r(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r(i, j) = std::conj(a(j, i));
    return r;
}

double frobenius_norm(const ComplexMatrix& a) {
    double s = 0;
    for (const Complex& z : a.data()) s += std::norm(z);
    return std::sqrt(s);
}

ComplexVector mat_vec(const ComplexMatrix& a, const ComplexVector& x) {
    const int n = a.dim();
    if (static_cast<int>(x.size()) != n)
        throw KernelError(ErrorKind::DimensionMismatch, "vector length differs from matrix dim");
    ComplexVector y(x.size());
    for (int i = 0; i < n; ++i) {
        Complex s = 0;
        for (int j = 0; j < n; ++j) s += a(i, j) * x[static_cast<size_t>(j)];
        y[static_cast<size_t>(i)] = s;
    }
    return y;
}

Complex inner(const ComplexVector& x, const ComplexVector& y) {
    if (x.size() != y.size())
        throw KernelError(ErrorKind::DimensionMismatch, "vector lengths differ");
    Complex s = 0;
    for (size_t k = 0; k < x.size(); ++k) s += x[k] * std::conj(y[k]);
    return s;
}

double vec_norm(const ComplexVector& x) {
    double s = 0;
    for (const Complex& z : x) s += std::norm(z);
    return std::sqrt(s);
}

ComplexMatrix symmetrize(const ComplexMatrix& m) {
    const int n = m.dim();
    ComplexMatrix r(n);
    for (int i = 0; i < n; ++i) {
        r(i, i) = Complex(m(i, i).real(), 0.0);
        for (int j = i + 1; j < n; ++j) {
            const Complex z = 0.5 * (m(i, j) + std::conj(m(j, i)));
            r(i, j) = z;
            r(j, i) = std::conj(z);
        }
    }
    return r;
}

bool is_hermitian_within(const ComplexMatrix& m, double tol_rel) {
    const double defect = frobenius_norm(sub(m, adjoint(m)));
    return defect <= tol_rel * std::max(frobenius_norm(m), 1e-300);
}

HermEigen hermitian_eigh(const ComplexMatrix& m, const Tolerances& tol) {
    const int n = m.dim();
    const double norm_m = frobenius_norm(m);
    require_finite(norm_m);
    if (!is_hermitian_within(m, tol.tol_herm))
        throw KernelError(ErrorKind::NotHermitian, "hermitian_eigh: input not Hermitian");

    ComplexMatrix a = symmetrize(m);
    ComplexMatrix u = ComplexMatrix::identity(n);

    const double target = 1e-13 * std::max(norm_m, 1e-300);
    const int max_sweeps = 40;
    bool converged = false;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += 2.0 * std::norm(a(i, j));
        off = std::sqrt(off);
        if (off < target) {
            converged = true;
            break;
        }
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const Complex g = a(p, q);
                const double r = std::abs(g);
                if (r == 0.0) continue;
                const double alpha = a(p, p).real();
                const double beta = a(q, q).real();
                // skip rotations that cannot move anything at this precision
                if (r <= 1e-300 ||
                    r <= 1e-18 * (std::abs(alpha) + std::abs(beta))) {
                    a(p, q) = 0.0;
                    a(q, p) = 0.0;
                    continue;
                }
                const Complex phase = g / r;
                const double tau = (beta - alpha) / (2.0 * r);
                const double t = (tau >= 0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                // V = I except the (p,q) block [[c, s*phase], [-s*conj(phase), c]]
                // A <- V* A V, applied as column then row updates.
                for (int i = 0; i < n; ++i) {
                    const Complex ap = a(i, p), aq = a(i, q);
                    a(i, p) = c * ap - s * std::conj(phase) * aq;
                    a(i, q) = s * phase * ap + c * aq;
                }
                for (int j = 0; j < n; ++j) {
                    const Complex ap = a(p, j), aq = a(q, j);
                    a(p, j) = c * ap - s * phase * aq;
                    a(q, j) = s * std::conj(phase) * ap + c * aq;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = Complex(a(p, p).real(), 0.0);
                a(q, q) = Complex(a(q, q).real(), 0.0);
                for (int i = 0; i < n; ++i) {
                    const Complex up = u(i, p), uq = u(i, q);
                    u(i, p) = c * up - s * std::conj(phase) * uq;
                    u(i, q) = s * phase * up + c * uq;
                }
            }
        }
    }
    if (!converged) {
        double off = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += 2.0 * std::norm(a(i, j));
        if (std::sqrt(off) >= target)
            throw KernelError(ErrorKind::NoConvergence, "hermitian_eigh: sweep limit exceeded");
    }

    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });

    HermEigen out;
    out.eigenvalues.resize(static_cast<size_t>(n));
    out.eigenvectors = ComplexMatrix(n);
    for (int k = 0; k < n; ++k) {
        const int src = order[static_cast<size_t>(k)];
        out.eigenvalues[static_cast<size_t>(k)] = a(src, src).real();
        for (int i = 0; i < n; ++i) out.eigenvectors(i, k) = u(i, src);
    }
    return out;
}

double op_norm(const ComplexMatrix& a) {
    const HermEigen e = hermitian_eigh(symmetrize(mul(adjoint(a), a)));
    const double lmax = std::max(e.eigenvalues.back(), 0.0);
    return std::sqrt(lmax);
}

ComplexMatrix func_hermitian(const ComplexMatrix& m, HermFunc f,
                             double pow_exponent, const Tolerances& tol) {
    const HermEigen e = hermitian_eigh(m, tol);
    const int n = m.dim();
    double lam_max_abs = 0;
    for (double l : e.eigenvalues) lam_max_abs = std::max(lam_max_abs, std::abs(l));

    std::vector<double> fl(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
        double l = e.eigenvalues[static_cast<size_t>(k)];
        switch (f) {
            case HermFunc::Sqrt:
            case HermFunc::Pow: {
                if (l < 0) {
                    if (l >= -tol.tol_psd * std::max(lam_max_abs, 1e-300))
                        l = 0.0;  // round-off, clamp
                    else
                        throw KernelError(ErrorKind::NotPSD,
                                          "func_hermitian: eigenvalue below clamp window");
                }
                fl[static_cast<size_t>(k)] =
                    (f == HermFunc::Sqrt) ? std::sqrt(l) : std::pow(l, pow_exponent);
                break;
            }
            case HermFunc::Ln: {
                if (l <= tol.tol_inv * lam_max_abs || lam_max_abs == 0.0)
                    throw KernelError(ErrorKind::NotPositiveDefinite,
                                      "func_hermitian: ln of a non positive definite matrix");
                fl[static_cast<size_t>(k)] = std::log(l);
                break;
            }
            case HermFunc::Exp: fl[static_cast<size_t>(k)] = std::exp(l); break;
            case HermFunc::Cos: fl[static_cast<size_t>(k)] = std::cos(l); break;
            case HermFunc::Sin: fl[static_cast<size_t>(k)] = std::sin(l); break;
        }
    }

    const ComplexMatrix& u = e.eigenvectors;
    ComplexMatrix r(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Complex s = 0;
            for (int k = 0; k < n; ++k)
                s += u(i, k) * fl[static_cast<size_t>(k)] * std::conj(u(j, k));
            r(i, j) = s;
        }
    return symmetrize(r);
}

ComplexMatrix matrix_abs(const ComplexMatrix& m, const Tolerances& tol) {
    return func_hermitian(symmetrize(mul(adjoint(m), m)), HermFunc::Sqrt, 0.0, tol);
}

std::pair<ComplexMatrix, ComplexMatrix> cartesian_parts(const ComplexMatrix& t) {
    const ComplexMatrix ts = adjoint(t);
    ComplexMatrix re = symmetrize(scale(add(t, ts), 0.5));
    ComplexMatrix im = symmetrize(scale(sub(t, ts), Complex(0.0, -0.5)));
    return {std::move(re), std::move(im)};
}

Verdict loewner_leq(const ComplexMatrix& a, const ComplexMatrix& b, const Tolerances& tol) {
    require_same_dim(a, b);
    if (!is_hermitian_within(a, tol.tol_herm) || !is_hermitian_within(b, tol.tol_herm))
        throw KernelError(ErrorKind::NotHermitian, "loewner_leq: inputs must be Hermitian");
    const ComplexMatrix d = symmetrize(sub(b, a));
    const HermEigen e = hermitian_eigh(d, tol);
    const double lmin = e.eigenvalues.front();
    const double ref = std::max({frobenius_norm(a), frobenius_norm(b), 1.0});
    if (lmin >= -tol.tol_psd * ref) return Verdict::IsTrue;
    if (lmin < -tol.guard * tol.tol_psd * ref) return Verdict::IsFalse;
    return Verdict::Indeterminate;
}

namespace {

/// Singular values through the Hermitian embedding [[0, M*], [M, 0]], whose
/// eigenvalues are exactly +-sigma_i. Diagonalizing M*M instead would square
/// the condition number and put the noise floor of sigma_min near
/// sqrt(machine eps), far above tol_inv.
std::pair<double, double> singular_extremes(const ComplexMatrix& m, const Tolerances& tol) {
    const int n = m.dim();
    ComplexMatrix aug(2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            aug(n + i, j) = m(i, j);
            aug(j, n + i) = std::conj(m(i, j));
        }
    const HermEigen e = hermitian_eigh(aug, tol);
    // ascending spectrum is (-sigma_max .. -sigma_min, +sigma_min .. +sigma_max);
    // averaging the central pair cancels symmetric round-off
    const double smin =
        std::max(0.0, 0.5 * (e.eigenvalues[static_cast<size_t>(n)] -
                             e.eigenvalues[static_cast<size_t>(n - 1)]));
    const double smax = std::max(
        {0.0, e.eigenvalues.back(), -e.eigenvalues.front()});
    return {smin, smax};
}

}  // namespace

double min_singular_value(const ComplexMatrix& m, const Tolerances& tol) {
    return singular_extremes(m, tol).first;
}

Verdict is_invertible(const ComplexMatrix& m, const Tolerances& tol) {
    const auto [smin, smax] = singular_extremes(m, tol);
    if (smax == 0.0) return Verdict::IsFalse;
    const double ratio = smin / smax;
    if (ratio > tol.guard * tol.tol_inv) return Verdict::IsTrue;
    if (ratio < tol.tol_inv) return Verdict::IsFalse;
    return Verdict::Indeterminate;
}

ComplexMatrix inverse(const ComplexMatrix& m, const Tolerances& tol) {
    if (is_invertible(m, tol) != Verdict::IsTrue)
        throw KernelError(ErrorKind::Singular, "inverse: matrix not invertible");
    const int n = m.dim();
    ComplexMatrix a = m;
    ComplexMatrix inv = ComplexMatrix::identity(n);
    for (int col = 0; col < n; ++col) {
        int piv = col;
        double best = std::abs(a(col, col));
        for (int i = col + 1; i < n; ++i) {
            const double v = std::abs(a(i, col));
            if (v > best) {
                best = v;
                piv = i;
            }
        }
        if (best == 0.0) throw KernelError(ErrorKind::Singular, "inverse: zero pivot");
        if (piv != col) {
            for (int j = 0; j < n; ++j) {
                std::swap(a(col, j), a(piv, j));
                std::swap(inv(col, j), inv(piv, j));
            }
        }
        const Complex d = a(col, col);
        for (int j = 0; j < n; ++j) {
            a(col, j) /= d;
            inv(col, j) /= d;
        }
        for (int i = 0; i < n; ++i) {
            if (i == col) continue;
            const Complex f = a(i, col);
            if (f == 0.0) continue;
            for (int j = 0; j < n; ++j) {
                a(i, j) -= f * a(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

ComplexMatrix block2x2(const ComplexMatrix& a, const ComplexMatrix& b,
                       const ComplexMatrix& c, const ComplexMatrix& d) {
    const int n = a.dim();
    if (b.dim() != n || c.dim() != n || d.dim() != n)
        throw KernelError(ErrorKind::DimensionMismatch, "block2x2: quadrant dims differ");
    ComplexMatrix t(2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            t(i, j) = a(i, j);
            t(i, j + n) = b(i, j);
            t(i + n, j) = c(i, j);
            t(i + n, j + n) = d(i, j);
        }
    return t;
}

std::tuple<ComplexMatrix, ComplexMatrix, ComplexMatrix, ComplexMatrix>
block_split(const ComplexMatrix& t) {
    if (t.dim() % 2 != 0)
        throw KernelError(ErrorKind::DimensionMismatch, "block_split: odd dimension");
    const int n = t.dim() / 2;
    ComplexMatrix a(n), b(n), c(n), d(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            a(i, j) = t(i, j);
            b(i, j) = t(i, j + n);
            c(i, j) = t(i + n, j);
            d(i, j) = t(i + n, j + n);
        }
    return {std::move(a), std::move(b), std::move(c), std::move(d)};
}

ClassifyFlags classify(const ComplexMatrix& m, const Tolerances& tol) {
    ClassifyFlags flags;
    const double nf = frobenius_norm(m);
    flags.hermitian = is_hermitian_within(m, tol.tol_herm);
    if (flags.hermitian) {
        const HermEigen e = hermitian_eigh(symmetrize(m), tol);
        flags.positive = e.eigenvalues.front() >= -tol.tol_psd * std::max(nf, 1.0);
    }
    const ComplexMatrix ms = adjoint(m);
    const double comm = frobenius_norm(sub(mul(ms, m), mul(m, ms)));
    flags.normal = comm <= tol.tol_herm * std::max(nf * nf, 1e-300);
    const double unit_defect =
        frobenius_norm(sub(mul(ms, m), ComplexMatrix::identity(m.dim())));
    flags.unitary = unit_defect <= tol.tol_herm * std::max(nf * nf, 1.0);
    return flags;
}

bool normal_via_cartesian(const ComplexMatrix& m, const Tolerances& tol) {
    const auto [re, im] = cartesian_parts(m);
    const double comm = frobenius_norm(sub(mul(re, im), mul(im, re)));
    const double nf = frobenius_norm(m);
    return comm <= tol.tol_herm * std::max(nf * nf, 1e-300);
}

}  // namespace opcheck
