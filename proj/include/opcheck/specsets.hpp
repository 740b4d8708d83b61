#pragma once

#include "opcheck/types.hpp"

namespace opcheck {

/// Finite multiset of complex spectral points. Multiset semantics: repeated
/// eigenvalues are retained, inclusion checks never depend on deduplication.
struct SpectrumSet {
    std::vector<Complex> points;
    int source_dim = 0;

    size_t size() const { return points.size(); }
};

/// All pairwise sums {lambda + mu}, duplicates retained.
SpectrumSet set_sum(const SpectrumSet& s1, const SpectrumSet& s2);
/// All pairwise products {lambda * mu}.
SpectrumSet set_prod(const SpectrumSet& s1, const SpectrumSet& s2);
/// Pointwise i * lambda.
SpectrumSet rotate_i(const SpectrumSet& s);
/// Pointwise lambda + mu.
SpectrumSet translate(const SpectrumSet& s, Complex mu);

struct ContainmentResult {
    bool contained = false;
    Complex witness;      // farthest offending point when not contained
    double distance = 0;  // its distance to the superset
};

/// Directed Hausdorff test: every point of s within eps of some superset point.
ContainmentResult contained_in(const SpectrumSet& s, const SpectrumSet& superset, double eps);

/// max |Im lambda| <= eps.
bool within_real_axis(const SpectrumSet& s, double eps);
/// max | |lambda| - 1 | <= eps.
bool within_unit_circle(const SpectrumSet& s, double eps);

/// Same size and mutually contained within eps.
bool multiset_equal(const SpectrumSet& s1, const SpectrumSet& s2, double eps);

/// Spectrum of a normal matrix by simultaneous diagonalization of its
/// Cartesian parts: diagonalize Re T, cluster eigenvalues with gap threshold
/// tol_spec * ||T||_F, diagonalize the compressed Im T within each cluster.
/// Falls back to diagonalizing Re T + t Im T for a generic t in [1/3, 2/3]
/// (derived deterministically from the matrix bits) when the cross-cluster
/// mass is too large.
SpectrumSet spectrum_normal(const ComplexMatrix& t, const Tolerances& tol = {});

}  // namespace opcheck
