#include "opcheck/specsets.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>

#include "opcheck/matcore.hpp"

namespace opcheck {

SpectrumSet set_sum(const SpectrumSet& s1, const SpectrumSet& s2) {
    SpectrumSet r;
    r.points.reserve(s1.points.size() * s2.points.size());
    for (const Complex& a : s1.points)
        for (const Complex& b : s2.points) r.points.push_back(a + b);
    return r;
}

SpectrumSet set_prod(const SpectrumSet& s1, const SpectrumSet& s2) {
    SpectrumSet r;
    r.points.reserve(s1.points.size() * s2.points.size());
    for (const Complex& a : s1.points)
        for (const Complex& b : s2.points) r.points.push_back(a * b);
    return r;
}

SpectrumSet rotate_i(const SpectrumSet& s) {
    SpectrumSet r = s;
    for (Complex& z : r.points) z = Complex(-z.imag(), z.real());
    return r;
}

SpectrumSet translate(const SpectrumSet& s, Complex mu) {
    SpectrumSet r = s;
    for (Complex& z : r.points) z += mu;
    return r;
}

ContainmentResult contained_in(const SpectrumSet& s, const SpectrumSet& superset, double eps) {
    if (eps <= 0) throw KernelError(ErrorKind::InvalidArgument, "contained_in: eps must be > 0");
    ContainmentResult res;
    res.contained = true;
    double worst = -1;
    for (const Complex& z : s.points) {
        double best = std::numeric_limits<double>::infinity();
        for (const Complex& w : superset.points) best = std::min(best, std::abs(z - w));
        if (best > eps && best > worst) {
            worst = best;
            res.witness = z;
            res.distance = best;
            res.contained = false;
        }
    }
    return res;
}

bool within_real_axis(const SpectrumSet& s, double eps) {
    for (const Complex& z : s.points)
        if (std::abs(z.imag()) > eps) return false;
    return true;
}

bool within_unit_circle(const SpectrumSet& s, double eps) {
    for (const Complex& z : s.points)
        if (std::abs(std::abs(z) - 1.0) > eps) return false;
    return true;
}

bool multiset_equal(const SpectrumSet& s1, const SpectrumSet& s2, double eps) {
    return s1.size() == s2.size() && contained_in(s1, s2, eps).contained &&
           contained_in(s2, s1, eps).contained;
}

namespace {

uint64_t splitmix64(uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Deterministic "random" mixing parameter in [1/3, 2/3] from the matrix bits.
double generic_combination_parameter(const ComplexMatrix& t) {
    uint64_t h = 0x6A09E667F3BCC908ULL;
    for (const Complex& z : t.data()) {
        uint64_t re_bits, im_bits;
        const double re = z.real(), im = z.imag();
        std::memcpy(&re_bits, &re, 8);
        std::memcpy(&im_bits, &im, 8);
        h = splitmix64(h ^ re_bits);
        h = splitmix64(h ^ im_bits);
    }
    const double u = static_cast<double>(h >> 11) * 0x1.0p-53;
    return 1.0 / 3.0 + u / 3.0;
}

SpectrumSet pair_on_basis(const ComplexMatrix& u, const ComplexMatrix& re,
                          const ComplexMatrix& im) {
    const int n = u.dim();
    SpectrumSet s;
    s.source_dim = n;
    s.points.resize(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
        ComplexVector col(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) col[static_cast<size_t>(i)] = u(i, k);
        const double a = inner(mat_vec(re, col), col).real();
        const double b = inner(mat_vec(im, col), col).real();
        s.points[static_cast<size_t>(k)] = Complex(a, b);
    }
    return s;
}

}  // namespace

SpectrumSet spectrum_normal(const ComplexMatrix& t, const Tolerances& tol) {
    const int n = t.dim();
    const double nf = frobenius_norm(t);
    {
        const ComplexMatrix ts = adjoint(t);
        const double comm = frobenius_norm(sub(mul(ts, t), mul(t, ts)));
        if (comm > tol.tol_herm * std::max(nf * nf, 1e-300))
            throw KernelError(ErrorKind::NotNormal, "spectrum_normal: input not normal");
    }
    const auto [re, im] = cartesian_parts(t);
    const HermEigen ere = hermitian_eigh(re, tol);
    const ComplexMatrix& u = ere.eigenvectors;

    // Im T in the Re-eigenbasis; block diagonal across clusters when T is normal.
    const ComplexMatrix im_rot = mul(adjoint(u), mul(im, u));

    const double gap = tol.tol_spec * std::max(nf, 1.0);
    std::vector<std::pair<int, int>> clusters;  // [begin, end)
    int begin = 0;
    for (int k = 1; k <= n; ++k) {
        if (k == n || ere.eigenvalues[static_cast<size_t>(k)] -
                              ere.eigenvalues[static_cast<size_t>(k - 1)] >
                          gap) {
            clusters.emplace_back(begin, k);
            begin = k;
        }
    }

    double cross_mass = 0;
    {
        size_t c = 0;
        for (int i = 0; i < n; ++i) {
            while (i >= clusters[c].second) ++c;
            for (int j = 0; j < n; ++j)
                if (j < clusters[c].first || j >= clusters[c].second)
                    cross_mass += std::norm(im_rot(i, j));
        }
        cross_mass = std::sqrt(cross_mass);
    }

    if (cross_mass > 0.5 * tol.tol_spec * std::max(nf, 1.0)) {
        // Ambiguous clustering: diagonalize a generic combination instead.
        const double tmix = generic_combination_parameter(t);
        const ComplexMatrix h = symmetrize(add(re, scale(im, tmix)));
        const HermEigen eh = hermitian_eigh(h, tol);
        return pair_on_basis(eh.eigenvectors, re, im);
    }

    SpectrumSet s;
    s.source_dim = n;
    s.points.resize(static_cast<size_t>(n));
    for (const auto& [lo, hi] : clusters) {
        const int m = hi - lo;
        if (m == 1) {
            s.points[static_cast<size_t>(lo)] =
                Complex(ere.eigenvalues[static_cast<size_t>(lo)], im_rot(lo, lo).real());
            continue;
        }
        ComplexMatrix blk(m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) blk(i, j) = im_rot(lo + i, lo + j);
        const HermEigen eb = hermitian_eigh(symmetrize(blk), tol);
        for (int j = 0; j < m; ++j) {
            // refine the real part through the eigenvector weights
            double a = 0;
            for (int i = 0; i < m; ++i)
                a += std::norm(eb.eigenvectors(i, j)) *
                     ere.eigenvalues[static_cast<size_t>(lo + i)];
            s.points[static_cast<size_t>(lo + j)] =
                Complex(a, eb.eigenvalues[static_cast<size_t>(j)]);
        }
    }
    return s;
}

}  // namespace opcheck
