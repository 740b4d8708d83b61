#include "opcheck/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "opcheck/generators.hpp"
#include "opcheck/matcore.hpp"
#include "opcheck/specsets.hpp"

namespace opcheck {

namespace {

struct NamedProperty {
    PropertyId id;
    const char* name;
};

constexpr NamedProperty kProperties[] = {
    {PropertyId::SqrtMonotone, "sqrt_monotone"},
    {PropertyId::SqrtSubadditive, "sqrt_subadditive"},
    {PropertyId::AbsParallelogram, "abs_parallelogram"},
    {PropertyId::OrderInverse, "order_inverse"},
    {PropertyId::MainTheorem, "main_theorem"},
    {PropertyId::CorollariesInvertible, "corollaries_invertible"},
    {PropertyId::BlockCorollary, "block_corollary"},
    {PropertyId::AbsSumEquivalence, "abs_sum_equivalence"},
    {PropertyId::NormalCharacterization, "normal_characterization"},
    {PropertyId::SpectralInclusionSum, "spectral_inclusion_sum"},
    {PropertyId::SpectrumClassics, "spectrum_classics"},
    {PropertyId::SubaddSubmultBridge, "subadd_submult_bridge"},
    {PropertyId::ProductPositive, "product_positive"},
    {PropertyId::FiniteSums, "finite_sums"},
};

static_assert(sizeof(kProperties) / sizeof(kProperties[0]) == kNumProperties);

}  // namespace

const char* property_name(PropertyId id) {
    for (const auto& p : kProperties)
        if (p.id == id) return p.name;
    return "unknown";
}

std::optional<PropertyId> property_from_name(const std::string& name) {
    for (const auto& p : kProperties)
        if (name == p.name) return p.id;
    return std::nullopt;
}

std::vector<PropertyId> all_properties() {
    std::vector<PropertyId> v;
    for (const auto& p : kProperties) v.push_back(p.id);
    return v;
}

namespace {

/// Accumulates sub-check outcomes within one trial. A failed conclusion
/// dominates; an unmet premise or Indeterminate verdict makes the trial
/// vacuous; otherwise the trial passes.
class Trial {
  public:
    explicit Trial(const TrialContext& ctx) : ctx_(ctx) {}

    const TrialContext& ctx() const { return ctx_; }
    const Tolerances& tol() const { return ctx_.tol; }
    int dim() const { return ctx_.dim; }
    uint64_t sub_seed(uint64_t tag) const { return mix_seed(ctx_.seed, 0x747269616cULL, tag); }

    void record_input(const std::string& name, const ComplexMatrix& m) {
        inputs_.emplace_back(name, m);
    }
    void record_margin(const std::string& name, double value) {
        margins_.emplace_back(name, value);
    }

    /// Returns true when the premise holds; otherwise the trial is vacuous.
    bool premise(Verdict v) {
        if (v == Verdict::IsTrue) return true;
        vacuous_ = true;
        return false;
    }
    bool premise(bool ok) {
        if (ok) return true;
        vacuous_ = true;
        return false;
    }

    void conclude_true(Verdict v, const std::string& what) {
        if (v == Verdict::IsTrue) return;
        if (v == Verdict::Indeterminate) {
            vacuous_ = true;
            return;
        }
        fail(what + ": expected true, got false");
    }
    void conclude_false(Verdict v, const std::string& what) {
        if (v == Verdict::IsFalse) return;
        if (v == Verdict::Indeterminate) {
            vacuous_ = true;
            return;
        }
        fail(what + ": expected false, got true");
    }
    void conclude(bool ok, const std::string& what) {
        if (!ok) fail(what);
    }

    void fail(const std::string& msg) {
        if (!failed_) message_ = msg;
        failed_ = true;
    }

    TrialResult result() const {
        TrialResult r;
        r.margins = margins_;
        if (failed_) {
            r.status = TrialStatus::Fail;
            r.witness.seed = ctx_.seed;
            r.witness.dim = ctx_.dim;
            r.witness.inputs = inputs_;
            r.witness.margins = margins_;
            r.witness.message = message_;
        } else if (vacuous_) {
            r.status = TrialStatus::Vacuous;
        } else {
            r.status = TrialStatus::Pass;
        }
        return r;
    }

  private:
    TrialContext ctx_;
    bool failed_ = false;
    bool vacuous_ = false;
    std::string message_;
    std::vector<std::pair<std::string, ComplexMatrix>> inputs_;
    std::vector<std::pair<std::string, double>> margins_;
};

ComplexMatrix abs_squared(const ComplexMatrix& m) {
    return symmetrize(mul(adjoint(m), m));
}

ComplexMatrix mat_pow_int(const ComplexMatrix& m, int n) {
    ComplexMatrix r = ComplexMatrix::identity(m.dim());
    for (int k = 0; k < n; ++k) r = mul(r, m);
    return r;
}

ComplexMatrix herm_pow(const ComplexMatrix& m, double p, const Tolerances& tol) {
    return func_hermitian(m, HermFunc::Pow, p, tol);
}

std::vector<Complex> real_diag(int n, Prng& rng, double lo, double hi) {
    std::vector<Complex> d(static_cast<size_t>(n));
    for (auto& z : d) z = lo + (hi - lo) * rng.next_uniform();
    return d;
}

Complex nonzero_coeff(Prng& rng) {
    const double mod = 0.5 + rng.next_uniform();
    const double phase = 2.0 * std::numbers::pi * rng.next_uniform();
    return Complex(mod * std::cos(phase), mod * std::sin(phase));
}

ComplexVector normalized_vector(int dim, uint64_t seed) {
    ComplexVector x = gen_vector(dim, seed);
    const double nrm = vec_norm(x);
    for (auto& z : x) z /= nrm;
    return x;
}

double spec_eps(const Tolerances& tol, double magnitude) {
    return tol.tol_spec * std::max(1.0, magnitude);
}

// ---- individual checks ----

void check_sqrt_monotone(Trial& t) {
    const auto& tol = t.tol();
    const ComplexMatrix a = gen({GenKind::Psd, t.dim(), t.sub_seed(1), 1.0});
    const ComplexMatrix b = add(a, gen({GenKind::Psd, t.dim(), t.sub_seed(2), 1.0}));
    t.record_input("A", a);
    t.record_input("B", b);
    t.conclude_true(loewner_leq(func_hermitian(a, HermFunc::Sqrt, 0, tol),
                                func_hermitian(b, HermFunc::Sqrt, 0, tol), tol),
                    "sqrt(A) <= sqrt(B) for 0 <= A <= B");

    Prng rng(t.sub_seed(3));
    const double alpha = std::vector<double>{1.0 / 3.0, 0.5, 2.0 / 3.0}[
        static_cast<size_t>(rng.next_int(0, 2))];
    const ComplexMatrix small =
        gen({GenKind::Psd, t.dim(), t.sub_seed(4), 0.3 + 0.6 * rng.next_uniform()});
    t.conclude_true(loewner_leq(small, herm_pow(small, alpha, tol), tol),
                    "A <= A^alpha for 0 <= A <= I");

    const int n = rng.next_int(2, 4);
    const auto [p, q] = gen_pair({GenKind::PositiveCommutingPair, t.dim(), t.sub_seed(5), 1.0});
    const ComplexMatrix lhs = herm_pow(symmetrize(add(p, q)), 1.0 / n, tol);
    const ComplexMatrix rhs = add(herm_pow(p, 1.0 / n, tol), herm_pow(q, 1.0 / n, tol));
    t.conclude_true(loewner_leq(lhs, rhs, tol), "(A+B)^(1/n) <= A^(1/n) + B^(1/n)");
}

void check_sqrt_subadditive(Trial& t) {
    const auto& tol = t.tol();
    const auto [a, b] = gen_pair({GenKind::PositiveCommutingPair, t.dim(), t.sub_seed(1), 1.0});
    t.record_input("A", a);
    t.record_input("B", b);
    const ComplexMatrix lhs = func_hermitian(symmetrize(add(a, b)), HermFunc::Sqrt, 0, tol);
    const ComplexMatrix rhs = add(func_hermitian(a, HermFunc::Sqrt, 0, tol),
                                  func_hermitian(b, HermFunc::Sqrt, 0, tol));
    t.conclude_true(loewner_leq(lhs, rhs, tol), "sqrt(A+B) <= sqrt(A) + sqrt(B)");
}

void check_abs_parallelogram(Trial& t) {
    const auto& tol = t.tol();
    const ComplexMatrix a = gen({GenKind::Generic, t.dim(), t.sub_seed(1), 1.0});
    const ComplexMatrix b = gen({GenKind::Generic, t.dim(), t.sub_seed(2), 1.0});
    t.record_input("A", a);
    t.record_input("B", b);
    const ComplexMatrix lhs = abs_squared(add(a, b));
    const ComplexMatrix rhs = scale(add(abs_squared(a), abs_squared(b)), 2.0);
    t.conclude_true(loewner_leq(lhs, rhs, tol), "|A+B|^2 <= 2|A|^2 + 2|B|^2");

    // full identity |A+B|^2 + |A-B|^2 = 2|A|^2 + 2|B|^2, checked as a
    // two-sided Loewner comparison; its exact margin is zero, so it also
    // doubles as the canary for a collapsed psd tolerance band
    const ComplexMatrix both = symmetrize(add(lhs, abs_squared(sub(a, b))));
    t.conclude_true(loewner_leq(both, rhs, tol), "parallelogram identity, <=");
    t.conclude_true(loewner_leq(rhs, both, tol), "parallelogram identity, >=");
}

void check_order_inverse(Trial& t) {
    const auto& tol = t.tol();
    const ComplexMatrix a = gen({GenKind::Posdef, t.dim(), t.sub_seed(1), 1.0});
    const ComplexMatrix b = add(a, gen({GenKind::Psd, t.dim(), t.sub_seed(2), 1.0}));
    t.record_input("A", a);
    t.record_input("B", b);
    if (t.premise(is_invertible(a, tol))) {
        const Verdict vb = is_invertible(b, tol);
        t.conclude_true(vb, "B invertible for invertible A <= B");
        if (vb == Verdict::IsTrue)
            t.conclude_true(loewner_leq(inverse(b, tol), inverse(a, tol), tol),
                            "B^-1 <= A^-1");
    }

    const ComplexMatrix p = gen({GenKind::Psd, t.dim(), t.sub_seed(3), 1.0});
    const SpectrumSet sp = spectrum_normal(p, tol);
    const double nf = frobenius_norm(p);
    t.conclude(within_real_axis(sp, spec_eps(tol, nf)), "sigma(P) real for P >= 0");
    double min_re = 0;
    for (const Complex& z : sp.points) min_re = std::min(min_re, z.real());
    t.conclude(min_re >= -tol.tol_psd * std::max(nf, 1.0),
               "sigma(P) nonnegative for P >= 0");
}

void check_main_theorem(Trial& t) {
    const auto& tol = t.tol();
    const ComplexMatrix a = gen({GenKind::Generic, t.dim(), t.sub_seed(1), 1.0});
    const ComplexMatrix b = gen({GenKind::Generic, t.dim(), t.sub_seed(2), 1.0});
    t.record_input("A", a);
    t.record_input("B", b);
    const ComplexMatrix sum_ab = add(a, b);
    if (t.premise(is_invertible(sum_ab, tol))) {
        const ComplexMatrix a2 = abs_squared(a), b2 = abs_squared(b);
        const ComplexMatrix sq_sum = symmetrize(add(a2, b2));
        t.conclude_true(is_invertible(sq_sum, tol), "|A|^2 + |B|^2 invertible");
        t.conclude_true(is_invertible(add(matrix_abs(a, tol), matrix_abs(b, tol)), tol),
                        "|A| + |B| invertible");
        Prng rng(t.sub_seed(3));
        const int n = rng.next_int(1, 3);
        const ComplexMatrix pow_sum =
            add(mat_pow_int(a2, 1 << (n - 1)), mat_pow_int(b2, 1 << (n - 1)));
        t.conclude_true(is_invertible(pow_sum, tol), "|A|^2^n + |B|^2^n invertible");

        // quantitative margin from the parallelogram law
        const double lmin = hermitian_eigh(sq_sum, tol).eigenvalues.front();
        const double smin = min_singular_value(sum_ab, tol);
        const double nrm = op_norm(sum_ab);
        const double margin = (lmin - 0.5 * smin * smin) / std::max(nrm * nrm, 1e-300);
        t.record_margin("main_margin_rel", margin);
        t.conclude(margin >= -1e-8, "lambda_min(|A|^2+|B|^2) >= sigma_min(A+B)^2/2");
    }

    // part 3: alpha A + beta B invertible => A + B invertible, for A, B >= 0
    Prng rng(t.sub_seed(4));
    ComplexMatrix p(t.dim()), q(t.dim());
    if (rng.next_int(0, 1) == 0) {
        std::tie(p, q) =
            gen_pair({GenKind::PositiveCommutingPair, t.dim(), t.sub_seed(5), 1.0});
    } else {
        p = gen({GenKind::Psd, t.dim(), t.sub_seed(6), 1.0});
        q = gen({GenKind::Psd, t.dim(), t.sub_seed(7), 1.0});
    }
    const Complex alpha = nonzero_coeff(rng), beta = nonzero_coeff(rng);
    if (is_invertible(add(scale(p, alpha), scale(q, beta)), tol) == Verdict::IsTrue) {
        t.conclude_true(is_invertible(add(p, q), tol),
                        "A + B invertible when alpha A + beta B is");
    } else {
        t.premise(false);
    }
}

void check_corollaries_invertible(Trial& t) {
    const auto& tol = t.tol();
    const ComplexMatrix a = mul(gen({GenKind::Posdef, t.dim(), t.sub_seed(1), 1.0}),
                                gen_unitary(t.dim(), t.sub_seed(2)));
    const ComplexMatrix b = gen({GenKind::Generic, t.dim(), t.sub_seed(3), 1.0});
    t.record_input("A", a);
    t.record_input("B", b);
    if (t.premise(is_invertible(a, tol))) {
        t.conclude_true(
            is_invertible(add(matrix_abs(sub(a, b), tol), matrix_abs(b, tol)), tol),
            "|A-B| + |B| invertible for invertible A");
        const auto [re, im] = cartesian_parts(a);
        t.conclude_true(is_invertible(add(matrix_abs(re, tol), matrix_abs(im, tol)), tol),
                        "|Re A| + |Im A| invertible for invertible A");
    }

    Prng rng(t.sub_seed(4));
    const std::vector<double> exps{0.5, 1.0, 1.7, 2.0, 3.2};
    const double p = exps[static_cast<size_t>(rng.next_int(0, 4))];
    const double q = exps[static_cast<size_t>(rng.next_int(0, 4))];
    const ComplexMatrix a2 = gen({GenKind::Generic, t.dim(), t.sub_seed(5), 1.0});
    const ComplexMatrix b2 = gen({GenKind::Generic, t.dim(), t.sub_seed(6), 1.0});
    if (is_invertible(add(a2, b2), tol) == Verdict::IsTrue) {
        const ComplexMatrix m = add(herm_pow(matrix_abs(a2, tol), p, tol),
                                    herm_pow(matrix_abs(b2, tol), q, tol));
        t.conclude_true(is_invertible(m, tol), "|A|^p + |B|^q invertible");
    } else {
        t.premise(false);
    }
}

void check_block_corollary(Trial& t) {
    const auto& tol = t.tol();
    const int n = t.dim();
    const ComplexMatrix a = gen({GenKind::Generic, n, t.sub_seed(1), 1.0});
    const ComplexMatrix b = gen({GenKind::Generic, n, t.sub_seed(2), 1.0});
    const ComplexMatrix c = gen({GenKind::Generic, n, t.sub_seed(3), 1.0});
    const ComplexMatrix d = gen({GenKind::Generic, n, t.sub_seed(4), 1.0});
    const ComplexMatrix big = block2x2(a, b, c, d);
    t.record_input("T", big);
    if (t.premise(is_invertible(big, tol))) {
        t.conclude_true(is_invertible(add(matrix_abs(a, tol), matrix_abs(c, tol)), tol),
                        "|A| + |C| invertible for invertible T");
        t.conclude_true(is_invertible(add(matrix_abs(b, tol), matrix_abs(d, tol)), tol),
                        "|B| + |D| invertible for invertible T");
    }

    // spectral claim on the block-triangular fixture (B = 0, A and D normal):
    // sigma(T) = sigma(A) union sigma(D) by the triangular structure.
    const ComplexMatrix an = gen({GenKind::Normal, n, t.sub_seed(5), 1.0});
    const ComplexMatrix dn = gen({GenKind::Normal, n, t.sub_seed(6), 1.0});
    SpectrumSet st = spectrum_normal(an, tol);
    const SpectrumSet sd = spectrum_normal(dn, tol);
    st.points.insert(st.points.end(), sd.points.begin(), sd.points.end());
    st.source_dim = 2 * n;
    t.conclude(contained_in(sd, st, spec_eps(tol, frobenius_norm(dn))).contained,
               "sigma(D) inside sigma(T) for block-triangular T");
}

void check_abs_sum_equivalence(Trial& t) {
    const auto& tol = t.tol();
    Prng rng(t.sub_seed(1));
    ComplexMatrix a(t.dim()), b(t.dim());
    if (rng.next_int(0, 3) == 0) {
        // shared-kernel variant: both sides of the equivalence must be false
        const ComplexMatrix u = gen_unitary(t.dim(), t.sub_seed(2));
        Prng drng(t.sub_seed(3));
        std::vector<Complex> f(static_cast<size_t>(t.dim())), g(f.size());
        for (auto& z : f) z = drng.next_gaussian();
        for (auto& z : g) z = drng.next_gaussian();
        f[0] = 0;
        g[0] = 0;
        a = assemble_normal(u, f);
        b = assemble_normal(u, g);
    } else {
        std::tie(a, b) =
            gen_pair({GenKind::CommutingNormalPair, t.dim(), t.sub_seed(4), 1.0});
    }
    t.record_input("A", a);
    t.record_input("B", b);
    const ComplexMatrix abs_a = matrix_abs(a, tol), abs_b = matrix_abs(b, tol);
    const ComplexMatrix sum_abs = symmetrize(add(abs_a, abs_b));
    // invertibility is threshold-relative, so the verdicts are only comparable
    // between forms of the same homogeneity degree: (|A|+|B|)^n vs |A|^n+|B|^n.
    // Their eigenvalue ratios differ by at most 2^(n-1), inside the guard band
    // for n <= 3.
    const int n = rng.next_int(2, 3);
    const Verdict v1 = is_invertible(mul(sum_abs, sum_abs), tol);
    const Verdict v2 = is_invertible(add(abs_squared(a), abs_squared(b)), tol);
    const Verdict v1n = is_invertible(mat_pow_int(sum_abs, n), tol);
    const Verdict vn =
        is_invertible(add(mat_pow_int(abs_a, n), mat_pow_int(abs_b, n)), tol);
    if (v1 == Verdict::Indeterminate || v2 == Verdict::Indeterminate ||
        v1n == Verdict::Indeterminate || vn == Verdict::Indeterminate) {
        t.premise(false);
        return;
    }
    t.conclude(v1 == v2, "(|A|+|B|)^2 and |A|^2+|B|^2 invertibility agree");
    t.conclude(v1n == vn, "(|A|+|B|)^n and |A|^n+|B|^n invertibility agree");
}

void check_normal_characterization(Trial& t) {
    const auto& tol = t.tol();
    const ComplexMatrix big = gen({GenKind::Normal, t.dim(), t.sub_seed(1), 1.0});
    t.record_input("T", big);
    const auto [re, im] = cartesian_parts(big);
    const ComplexMatrix abs_re = matrix_abs(re, tol), abs_im = matrix_abs(im, tol);
    const ComplexMatrix abs_t = matrix_abs(big, tol);

    const Verdict vt = is_invertible(big, tol);
    const Verdict vs = is_invertible(add(abs_re, abs_im), tol);
    if (vt == Verdict::Indeterminate || vs == Verdict::Indeterminate)
        t.premise(false);
    else
        t.conclude(vt == vs, "T and |Re T|+|Im T| invertibility agree");

    const SpectrumSet spec = spectrum_normal(big, tol);
    Prng rng(t.sub_seed(2));
    const Complex lam =
        spec.points[static_cast<size_t>(rng.next_int(0, t.dim() - 1))];
    const ComplexMatrix eye = ComplexMatrix::identity(t.dim());
    const ComplexMatrix member =
        add(matrix_abs(sub(re, scale(eye, lam.real())), tol),
            matrix_abs(sub(im, scale(eye, lam.imag())), tol));
    // |X| of an exactly singular X carries a sqrt-amplified noise floor of
    // about sqrt(eigensolver eps), so membership is tested against sqrt(tol_inv)
    // rather than the plain invertibility verdict
    const double member_ref = std::max(1.0, frobenius_norm(big));
    const double member_smin = min_singular_value(member, tol) / member_ref;
    t.record_margin("member_smin_rel", member_smin);
    t.conclude(member_smin <= std::sqrt(tol.tol_inv),
               "|Re T - alpha| + |Im T - beta| singular at an eigenvalue");

    double max_re = 0, max_im = 0;
    for (const Complex& z : spec.points) {
        max_re = std::max(max_re, z.real());
        max_im = std::max(max_im, z.imag());
    }
    const Complex outside(max_re + 0.5, max_im + 0.5);
    const ComplexMatrix nonmember =
        add(matrix_abs(sub(re, scale(eye, outside.real())), tol),
            matrix_abs(sub(im, scale(eye, outside.imag())), tol));
    t.conclude_true(is_invertible(nonmember, tol),
                    "|Re T - alpha| + |Im T - beta| invertible off the spectrum");

    t.conclude_true(loewner_leq(abs_re, abs_t, tol), "|Re T| <= |T|");
    t.conclude_true(loewner_leq(abs_im, abs_t, tol), "|Im T| <= |T|");
    t.conclude_true(loewner_leq(abs_t, add(abs_re, abs_im), tol),
                    "|T| <= |Re T| + |Im T|");
}

void check_spectral_inclusion_sum(Trial& t) {
    const auto& tol = t.tol();
    const auto [s, w] = gen_pair({GenKind::CommutingNormalPair, t.dim(), t.sub_seed(1), 1.0});
    t.record_input("S", s);
    t.record_input("T", w);
    const auto [rs, is] = cartesian_parts(s);
    const auto [rt, it] = cartesian_parts(w);
    const double mag = frobenius_norm(s) + frobenius_norm(w);
    const SpectrumSet lhs = spectrum_normal(add(s, w), tol);
    const SpectrumSet re_sum = spectrum_normal(symmetrize(add(rs, rt)), tol);
    const SpectrumSet im_sum = spectrum_normal(symmetrize(add(is, it)), tol);
    t.conclude(
        contained_in(lhs, set_sum(re_sum, rotate_i(im_sum)), spec_eps(tol, mag)).contained,
        "sigma(S+T) inside sigma(Re S+Re T) + i sigma(Im S+Im T)");

    const ComplexMatrix tn = gen({GenKind::Normal, t.dim(), t.sub_seed(2), 1.0});
    const auto [a, b] = cartesian_parts(tn);
    t.conclude(contained_in(spectrum_normal(tn, tol),
                            set_sum(spectrum_normal(a, tol),
                                    rotate_i(spectrum_normal(b, tol))),
                            spec_eps(tol, frobenius_norm(tn)))
                   .contained,
               "sigma(T) inside sigma(A) + i sigma(B)");

    // commuting Hermitian pair: subadditivity and submultiplicativity
    const ComplexMatrix u = gen_unitary(t.dim(), t.sub_seed(3));
    Prng rng(t.sub_seed(4));
    const ComplexMatrix h1 = assemble_normal(u, real_diag(t.dim(), rng, -1.0, 1.0));
    const ComplexMatrix h2 = assemble_normal(u, real_diag(t.dim(), rng, -1.0, 1.0));
    const SpectrumSet s1 = spectrum_normal(symmetrize(h1), tol);
    const SpectrumSet s2 = spectrum_normal(symmetrize(h2), tol);
    t.conclude(contained_in(spectrum_normal(symmetrize(add(h1, h2)), tol),
                            set_sum(s1, s2), spec_eps(tol, 2.0))
                   .contained,
               "sigma(A+B) inside sigma(A) + sigma(B)");
    t.conclude(contained_in(spectrum_normal(symmetrize(mul(h1, h2)), tol),
                            set_prod(s1, s2), spec_eps(tol, 2.0))
                   .contained,
               "sigma(AB) inside sigma(A) sigma(B)");
}

void check_spectrum_classics(Trial& t) {
    const auto& tol = t.tol();
    const ComplexMatrix a = gen({GenKind::Hermitian, t.dim(), t.sub_seed(1), 1.0});
    t.conclude(within_real_axis(spectrum_normal(a, tol), spec_eps(tol, frobenius_norm(a))),
               "sigma(A) real for Hermitian A");

    const ComplexMatrix u = gen({GenKind::Unitary, t.dim(), t.sub_seed(2), 1.0});
    t.conclude(within_unit_circle(spectrum_normal(u, tol), tol.tol_spec),
               "sigma(U) on the unit circle");

    const auto [x, y] = gen_pair({GenKind::CommutingNormalPair, t.dim(), t.sub_seed(3), 1.0});
    t.record_input("A", x);
    t.record_input("B", y);
    const ComplexMatrix lhs =
        matrix_abs(sub(matrix_abs(x, tol), matrix_abs(y, tol)), tol);
    t.conclude_true(loewner_leq(lhs, matrix_abs(sub(x, y), tol), tol),
                    "||A| - |B|| <= |A - B|");

    // normal with real spectrum is self-adjoint; purely imaginary spectrum
    // forces skew-adjointness
    const ComplexMatrix basis = gen_unitary(t.dim(), t.sub_seed(4));
    Prng rng(t.sub_seed(5));
    const ComplexMatrix real_t = assemble_normal(basis, real_diag(t.dim(), rng, -1.0, 1.0));
    t.conclude(frobenius_norm(sub(real_t, adjoint(real_t))) <=
                   tol.tol_eq * std::max(frobenius_norm(real_t), 1e-300),
               "normal T with real spectrum is self-adjoint");
    auto imag_d = real_diag(t.dim(), rng, -1.0, 1.0);
    for (auto& z : imag_d) z = Complex(0.0, z.real());
    const ComplexMatrix skew_t = assemble_normal(basis, imag_d);
    t.conclude(frobenius_norm(add(skew_t, adjoint(skew_t))) <=
                   tol.tol_eq * std::max(frobenius_norm(skew_t), 1e-300),
               "normal T with imaginary spectrum is skew-adjoint");
}

void check_subadd_submult_bridge(Trial& t) {
    const auto& tol = t.tol();
    const ComplexMatrix u = gen_unitary(t.dim(), t.sub_seed(1));
    Prng rng(t.sub_seed(2));
    const ComplexMatrix a = assemble_normal(u, real_diag(t.dim(), rng, -1.0, 1.0));
    const ComplexMatrix b = assemble_normal(u, real_diag(t.dim(), rng, -1.0, 1.0));
    t.record_input("A", a);
    t.record_input("B", b);
    const ComplexMatrix exp_sum =
        func_hermitian(symmetrize(add(a, b)), HermFunc::Exp, 0, tol);
    const ComplexMatrix exp_prod = symmetrize(mul(func_hermitian(symmetrize(a), HermFunc::Exp, 0, tol),
                                                  func_hermitian(symmetrize(b), HermFunc::Exp, 0, tol)));
    t.conclude(multiset_equal(spectrum_normal(exp_sum, tol), spectrum_normal(exp_prod, tol),
                              spec_eps(tol, frobenius_norm(exp_prod))),
               "sigma(exp(A+B)) = sigma(exp(A) exp(B))");
    const SpectrumSet sa = spectrum_normal(symmetrize(a), tol);
    const SpectrumSet sb = spectrum_normal(symmetrize(b), tol);
    t.conclude(contained_in(spectrum_normal(symmetrize(add(a, b)), tol), set_sum(sa, sb),
                            spec_eps(tol, 2.0))
                   .contained,
               "sigma(A+B) inside sigma(A) + sigma(B)");

    const ComplexMatrix p = assemble_normal(u, real_diag(t.dim(), rng, 0.3, 2.0));
    const ComplexMatrix q = assemble_normal(u, real_diag(t.dim(), rng, 0.3, 2.0));
    const ComplexMatrix pq = symmetrize(mul(p, q));
    const ComplexMatrix ln_pq = func_hermitian(pq, HermFunc::Ln, 0, tol);
    const ComplexMatrix ln_sum = symmetrize(add(func_hermitian(symmetrize(p), HermFunc::Ln, 0, tol),
                                                func_hermitian(symmetrize(q), HermFunc::Ln, 0, tol)));
    t.conclude(multiset_equal(spectrum_normal(ln_pq, tol), spectrum_normal(ln_sum, tol),
                              spec_eps(tol, frobenius_norm(ln_sum))),
               "sigma(ln(AB)) = sigma(ln A + ln B)");
    const SpectrumSet sp = spectrum_normal(symmetrize(p), tol);
    const SpectrumSet sq = spectrum_normal(symmetrize(q), tol);
    t.conclude(contained_in(spectrum_normal(pq, tol), set_prod(sp, sq), spec_eps(tol, 4.0))
                   .contained,
               "sigma(AB) inside sigma(A) sigma(B)");
}

void check_product_positive(Trial& t) {
    const auto& tol = t.tol();
    const ComplexMatrix a = mul(gen({GenKind::Posdef, t.dim(), t.sub_seed(1), 1.0}),
                                gen_unitary(t.dim(), t.sub_seed(2)));
    Prng rng(t.sub_seed(3));
    ComplexMatrix b(t.dim());
    if (rng.next_int(0, 3) == 0) {
        b = inverse(a, tol);  // right-inverse case, AB = I
    } else {
        const ComplexMatrix p = gen({GenKind::Posdef, t.dim(), t.sub_seed(4), 1.0});
        b = mul(inverse(a, tol), p);
    }
    t.record_input("A", a);
    t.record_input("B", b);
    const ComplexMatrix ab = mul(a, b);
    const ClassifyFlags flags = classify(ab, tol);
    if (!t.premise(flags.positive && is_invertible(ab, tol) == Verdict::IsTrue)) return;

    const ComplexMatrix sum = symmetrize(add(mul(a, adjoint(a)), mul(adjoint(b), b)));
    t.conclude_true(is_invertible(sum, tol), "|A*|^2 + |B|^2 invertible");
    const ComplexMatrix ab_h = symmetrize(ab);
    t.conclude_true(loewner_leq(ab_h, scale(sum, 2.0), tol), "AB <= 2(AA* + B*B)");

    const ComplexMatrix inv_sum = inverse(sum, tol);
    const ComplexMatrix inv_ab = inverse(ab_h, tol);
    double min_gap = std::numeric_limits<double>::infinity();
    double max_ratio = 0;
    for (uint64_t k = 0; k < 8; ++k) {
        const ComplexVector x = normalized_vector(t.dim(), t.sub_seed(100 + k));
        const double lhs = inner(mat_vec(inv_sum, x), x).real();
        const double rhs = inner(mat_vec(inv_ab, x), x).real();
        min_gap = std::min(min_gap, rhs - lhs);
        if (rhs > 0) max_ratio = std::max(max_ratio, lhs / rhs);
    }
    t.record_margin("inverse_form_gap", min_gap);
    t.record_margin("observed_constant", max_ratio);
    t.conclude(min_gap >= -1e-8,
               "<(AA*+B*B)^-1 x, x> <= <(AB)^-1 x, x> on random vectors");
}

void check_finite_sums(Trial& t) {
    const auto& tol = t.tol();
    Prng rng(t.sub_seed(1));
    const int k = rng.next_int(2, 4);

    std::vector<ComplexMatrix> mats;
    std::vector<Complex> coeffs;
    for (int j = 0; j < k; ++j) {
        mats.push_back(gen({GenKind::Generic, t.dim(), t.sub_seed(10 + static_cast<uint64_t>(j)), 1.0}));
        coeffs.push_back(nonzero_coeff(rng));
    }
    ComplexMatrix weighted = ComplexMatrix::zero(t.dim());
    ComplexMatrix gram = ComplexMatrix::zero(t.dim());
    double coeff_sq = 0;
    for (int j = 0; j < k; ++j) {
        weighted = add(weighted, scale(mats[static_cast<size_t>(j)], coeffs[static_cast<size_t>(j)]));
        gram = add(gram, abs_squared(mats[static_cast<size_t>(j)]));
        coeff_sq += std::norm(coeffs[static_cast<size_t>(j)]);
    }
    gram = symmetrize(gram);
    for (uint64_t v = 0; v < 8; ++v) {
        const ComplexVector x = normalized_vector(t.dim(), t.sub_seed(200 + v));
        const double lhs = std::pow(vec_norm(mat_vec(weighted, x)), 2);
        const double rhs = coeff_sq * inner(mat_vec(gram, x), x).real();
        t.conclude(lhs <= rhs + 1e-10 * std::max(rhs, 1.0),
                   "||sum a_k A_k x||^2 <= sum|a_k|^2 <sum A_k*A_k x, x>");
    }
    if (is_invertible(weighted, tol) == Verdict::IsTrue)
        t.conclude_true(is_invertible(gram, tol),
                        "sum |A_k|^2 invertible when sum a_k A_k is");

    // sum A_k B_k positive invertible by the P-splitting construction
    const ComplexMatrix p = gen({GenKind::Posdef, t.dim(), t.sub_seed(20), 1.0});
    std::vector<ComplexMatrix> as, bs;
    as.push_back(mul(gen({GenKind::Posdef, t.dim(), t.sub_seed(21), 1.0}),
                     gen_unitary(t.dim(), t.sub_seed(22))));
    ComplexMatrix tail = ComplexMatrix::zero(t.dim());
    for (int j = 1; j < k; ++j) {
        as.push_back(gen({GenKind::Generic, t.dim(), t.sub_seed(30 + static_cast<uint64_t>(j)), 0.5}));
        bs.push_back(gen({GenKind::Generic, t.dim(), t.sub_seed(40 + static_cast<uint64_t>(j)), 0.5}));
        tail = add(tail, mul(as[static_cast<size_t>(j)], bs[static_cast<size_t>(j - 1)]));
    }
    bs.insert(bs.begin(), mul(inverse(as[0], tol), sub(p, tail)));
    ComplexMatrix sum_ab = ComplexMatrix::zero(t.dim());
    ComplexMatrix sum_aa = ComplexMatrix::zero(t.dim());
    ComplexMatrix sum_bb = ComplexMatrix::zero(t.dim());
    for (int j = 0; j < k; ++j) {
        sum_ab = add(sum_ab, mul(as[static_cast<size_t>(j)], bs[static_cast<size_t>(j)]));
        sum_aa = add(sum_aa, mul(as[static_cast<size_t>(j)], adjoint(as[static_cast<size_t>(j)])));
        sum_bb = add(sum_bb, abs_squared(bs[static_cast<size_t>(j)]));
    }
    const ClassifyFlags flags = classify(sum_ab, tol);
    if (t.premise(flags.positive && is_invertible(sum_ab, tol) == Verdict::IsTrue)) {
        const ComplexMatrix conclusion = symmetrize(add(sum_aa, sum_bb));
        t.conclude_true(is_invertible(conclusion, tol),
                        "sum |A_k*|^2 + sum |B_k|^2 invertible");
        t.conclude_true(loewner_leq(symmetrize(sum_ab), scale(conclusion, 0.5), tol),
                        "sum A_k B_k <= (1/2) sum (|B_k|^2 + |A_k*|^2)");
    }

    // sum A_k A_k* invertible => sum |A_k*|^2 + sum |A_k|^2 invertible
    ComplexMatrix gram_star = ComplexMatrix::zero(t.dim());
    for (int j = 0; j < k; ++j)
        gram_star = add(gram_star, mul(as[static_cast<size_t>(j)],
                                       adjoint(as[static_cast<size_t>(j)])));
    gram_star = symmetrize(gram_star);
    if (is_invertible(gram_star, tol) == Verdict::IsTrue) {
        ComplexMatrix both = gram_star;
        for (int j = 0; j < k; ++j)
            both = add(both, abs_squared(as[static_cast<size_t>(j)]));
        t.conclude_true(is_invertible(symmetrize(both), tol),
                        "sum |A_k*|^2 + sum |A_k|^2 invertible");
    }
}

}  // namespace

TrialResult run_trial(PropertyId id, const TrialContext& ctx) {
    Trial t(ctx);
    try {
        switch (id) {
            case PropertyId::SqrtMonotone: check_sqrt_monotone(t); break;
            case PropertyId::SqrtSubadditive: check_sqrt_subadditive(t); break;
            case PropertyId::AbsParallelogram: check_abs_parallelogram(t); break;
            case PropertyId::OrderInverse: check_order_inverse(t); break;
            case PropertyId::MainTheorem: check_main_theorem(t); break;
            case PropertyId::CorollariesInvertible: check_corollaries_invertible(t); break;
            case PropertyId::BlockCorollary: check_block_corollary(t); break;
            case PropertyId::AbsSumEquivalence: check_abs_sum_equivalence(t); break;
            case PropertyId::NormalCharacterization: check_normal_characterization(t); break;
            case PropertyId::SpectralInclusionSum: check_spectral_inclusion_sum(t); break;
            case PropertyId::SpectrumClassics: check_spectrum_classics(t); break;
            case PropertyId::SubaddSubmultBridge: check_subadd_submult_bridge(t); break;
            case PropertyId::ProductPositive: check_product_positive(t); break;
            case PropertyId::FiniteSums: check_finite_sums(t); break;
        }
    } catch (const KernelError& e) {
        // kernel errors are harness faults, not counterexamples
        TrialResult r;
        r.status = TrialStatus::Fault;
        r.fault_message = e.what();
        return r;
    }
    return t.result();
}

std::string explain(PropertyId id) {
    std::ostringstream out;
    out << property_name(id) << ":\n";
    switch (id) {
        case PropertyId::SqrtMonotone:
            out << "  statement: 0≤A≤B ⟹ √A ≤ √B; 0≤A≤I ⟹ A^α ≥ A for α∈[0,1];\n"
                   "             (A+B)^{1/n} ≤ A^{1/n}+B^{1/n} for commuting A,B ≥ 0\n"
                   "  hypotheses: A psd, B = A + psd; commuting positive pairs for the n-th root\n"
                   "  check: each Loewner comparison must return true";
            break;
        case PropertyId::SqrtSubadditive:
            out << "  statement: √(A+B) ≤ √A + √B\n"
                   "  hypotheses: A, B ≥ 0 with AB = BA\n"
                   "  check: loewner_leq(sqrt(A+B), sqrt(A)+sqrt(B)) = true";
            break;
        case PropertyId::AbsParallelogram:
            out << "  statement: |A+B|² ≤ 2|A|² + 2|B|²\n"
                   "  hypotheses: none (arbitrary A, B)\n"
                   "  check: loewner_leq((A+B)*(A+B), 2A*A + 2B*B) = true";
            break;
        case PropertyId::OrderInverse:
            out << "  statement: 0 ≤ A ≤ B with A invertible ⟹ B is invertible and B⁻¹ ≤ A⁻¹;\n"
                   "             σ(P) ⊂ [0,∞) for P ≥ 0\n"
                   "  hypotheses: A positive definite, B = A + psd\n"
                   "  check: invertibility verdict and Loewner comparison of inverses";
            break;
        case PropertyId::MainTheorem:
            out << "  statement: A+B invertible ⟹ |A|²+|B|², |A|+|B|, |A|^{2ⁿ}+|B|^{2ⁿ} invertible;\n"
                   "             for A,B ≥ 0: αA+βB invertible ⟹ A+B invertible\n"
                   "  hypotheses: premise-guarded invertibility of A+B (resp. αA+βB)\n"
                   "  check: all conclusion verdicts true; margin λ_min(|A|²+|B|²) ≥ σ_min(A+B)²/2";
            break;
        case PropertyId::CorollariesInvertible:
            out << "  statement: A invertible ⟹ |A−B|+|B| and |Re A|+|Im A| invertible;\n"
                   "             A+B invertible ⟹ |A|^p + |B|^q invertible for p,q > 0\n"
                   "  hypotheses: invertible A (posdef·unitary); p,q ∈ {0.5, 1, 1.7, 2, 3.2}\n"
                   "  check: all conclusion verdicts true";
            break;
        case PropertyId::BlockCorollary:
            out << "  statement: T = [[A,B],[C,D]] invertible ⟹ |A|+|C| and |B|+|D| invertible;\n"
                   "             for B = 0 and D normal, σ(D) ⊂ σ(T)\n"
                   "  hypotheses: premise-guarded invertibility of the 2n×2n block matrix\n"
                   "  check: verdicts true; spectral containment on the triangular fixture";
            break;
        case PropertyId::AbsSumEquivalence:
            out << "  statement: |A|+|B| invertible ⟺ |A|²+|B|² invertible ⟺ |A|ⁿ+|B|ⁿ invertible\n"
                   "  hypotheses: AB = BA with A or B normal (commuting normal pairs)\n"
                   "  check: the three-valued verdicts agree whenever none is indeterminate";
            break;
        case PropertyId::NormalCharacterization:
            out << "  statement: normal T invertible ⟺ |Re T|+|Im T| invertible;\n"
                   "             λ=α+iβ ∈ σ(T) ⟺ |Re T−αI|+|Im T−βI| not invertible;\n"
                   "             |Re T| ≤ |T|, |Im T| ≤ |T|, |T| ≤ |Re T|+|Im T|\n"
                   "  hypotheses: T normal; λ sampled on and off the spectrum\n"
                   "  check: verdict agreement, membership detection, Loewner bounds";
            break;
        case PropertyId::SpectralInclusionSum:
            out << "  statement: σ(S+T) ⊂ σ(Re S+Re T)+iσ(Im S+Im T); σ(T) ⊂ σ(A)+iσ(B);\n"
                   "             σ(A+B) ⊂ σ(A)+σ(B) and σ(AB) ⊂ σ(A)σ(B) for commuting pairs\n"
                   "  hypotheses: commuting normal pairs; commuting Hermitian pairs\n"
                   "  check: directed containment of spectra at tol_spec";
            break;
        case PropertyId::SpectrumClassics:
            out << "  statement: σ(A) ⊂ ℝ for self-adjoint A; σ(U) ⊂ {|λ|=1} for unitary U;\n"
                   "             ||A|−|B|| ≤ |A−B|; normal with real spectrum is self-adjoint;\n"
                   "             normal with imaginary spectrum is skew-adjoint\n"
                   "  hypotheses: commuting normal pair for the reverse triangle inequality\n"
                   "  check: axis/circle containment, Loewner comparison, adjoint defect";
            break;
        case PropertyId::SubaddSubmultBridge:
            out << "  statement: subadditivity ⟺ submultiplicativity of the spectrum, via\n"
                   "             σ(e^{A+B}) = σ(e^A e^B) and σ(ln(AB)) = σ(ln A + ln B)\n"
                   "  hypotheses: commuting Hermitian pair (exp); commuting posdef pair (ln)\n"
                   "  check: multiset spectral equality at tol_spec, plus both inclusions";
            break;
        case PropertyId::ProductPositive:
            out << "  statement: AB ≥ 0 invertible ⟹ |A*|²+|B|² invertible;\n"
                   "             AB ≤ 2(AA*+B*B); ⟨(AA*+B*B)⁻¹x,x⟩ ≤ ⟨(AB)⁻¹x,x⟩\n"
                   "  hypotheses: AB = P positive definite by construction (B = A⁻¹P)\n"
                   "  check: verdicts, Loewner bound, inverse quadratic forms on 8 vectors";
            break;
        case PropertyId::FiniteSums:
            out << "  statement: ‖Σ a_k A_k x‖² ≤ Σ|a_k|² ⟨Σ A_k*A_k x, x⟩;\n"
                   "             Σ a_k A_k invertible ⟹ Σ|A_k|² invertible;\n"
                   "             Σ A_kB_k ≥ 0 invertible ⟹ Σ|A_k*|²+Σ|B_k|² invertible\n"
                   "  hypotheses: k ∈ {2,3,4}; premise constructed by P-splitting\n"
                   "  check: vector inequality on 8 vectors, verdicts, Loewner proof step";
            break;
    }
    return out.str();
}

namespace {

CounterexampleResult::Claim claim(const std::string& desc, Verdict expected, Verdict actual) {
    return {desc, verdict_name(expected), verdict_name(actual)};
}

}  // namespace

std::vector<CounterexampleResult> counterexample_registry(const Tolerances& tol) {
    std::vector<CounterexampleResult> out;
    const auto push = [&out](CounterexampleResult r) {
        r.confirmed = true;
        for (const auto& c : r.claims)
            if (c.expected != c.actual) r.confirmed = false;
        out.push_back(std::move(r));
    };

    {
        // B = -A: both invertible, the sum is not
        const ComplexMatrix a = ComplexMatrix::diag({1.0, 2.0});
        const ComplexMatrix b = scale(a, -1.0);
        CounterexampleResult r;
        r.name = "negated_operator";
        r.claims.push_back(claim("A invertible", Verdict::IsTrue, is_invertible(a, tol)));
        r.claims.push_back(claim("B = -A invertible", Verdict::IsTrue, is_invertible(b, tol)));
        r.claims.push_back(
            claim("A + B invertible", Verdict::IsFalse, is_invertible(add(a, b), tol)));
        push(std::move(r));
    }
    {
        // T = A + iB = (1-i)A invertible while Re T + Im T = 0 is not
        const ComplexMatrix a = ComplexMatrix::diag({1.0, 2.0});
        const ComplexMatrix b = scale(a, -1.0);
        const ComplexMatrix t = scale(a, Complex(1.0, -1.0));
        CounterexampleResult r;
        r.name = "one_minus_i_rotation";
        r.claims.push_back(
            claim("(1-i)A invertible", Verdict::IsTrue, is_invertible(t, tol)));
        r.claims.push_back(
            claim("Re T + Im T invertible", Verdict::IsFalse, is_invertible(add(a, b), tol)));
        const auto [re, im] = cartesian_parts(t);
        r.claims.push_back(claim("|Re T| + |Im T| invertible", Verdict::IsTrue,
                                 is_invertible(add(matrix_abs(re, tol), matrix_abs(im, tol)), tol)));
        push(std::move(r));
    }
    {
        // B = iA: A^2 + B^2 = 0 while |A|^2 + |B|^2 stays invertible
        const ComplexMatrix a = ComplexMatrix::diag({1.0, 1.0});
        const ComplexMatrix b = scale(a, Complex(0.0, 1.0));
        CounterexampleResult r;
        r.name = "squares_cancel";
        r.claims.push_back(claim("A invertible", Verdict::IsTrue, is_invertible(a, tol)));
        r.claims.push_back(claim("B = iA invertible", Verdict::IsTrue, is_invertible(b, tol)));
        r.claims.push_back(claim("A^2 + B^2 invertible", Verdict::IsFalse,
                                 is_invertible(add(mul(a, a), mul(b, b)), tol)));
        r.claims.push_back(
            claim("|A|^2 + |B|^2 invertible", Verdict::IsTrue,
                  is_invertible(add(abs_squared(a), abs_squared(b)), tol)));
        push(std::move(r));
    }
    {
        // diag(cos x_k), diag(sin x_k): both singular, the combination unitary
        const std::vector<double> xs{0.0, std::numbers::pi / 2.0, std::numbers::pi, 1.0};
        std::vector<Complex> dc, ds, dt;
        for (double x : xs) {
            dc.emplace_back(std::cos(x), 0.0);
            ds.emplace_back(std::sin(x), 0.0);
            dt.emplace_back(std::cos(x), std::sin(x));
        }
        const ComplexMatrix a = ComplexMatrix::diag(dc);
        const ComplexMatrix b = ComplexMatrix::diag(ds);
        const ComplexMatrix t = ComplexMatrix::diag(dt);
        CounterexampleResult r;
        r.name = "phase_multiplication";
        r.claims.push_back(claim("Re part invertible", Verdict::IsFalse, is_invertible(a, tol)));
        r.claims.push_back(claim("Im part invertible", Verdict::IsFalse, is_invertible(b, tol)));
        r.claims.push_back(claim("A + iB invertible", Verdict::IsTrue, is_invertible(t, tol)));
        r.claims.push_back(
            claim("A + iB unitary", Verdict::IsTrue,
                  classify(t, tol).unitary ? Verdict::IsTrue : Verdict::IsFalse));
        push(std::move(r));
    }
    {
        // cos^2 A + sin^2 A = I forces |cos A| + |sin A| invertible
        ComplexMatrix a(3);
        a(0, 0) = 2.0; a(0, 1) = 1.0; a(1, 0) = 1.0;
        a(1, 1) = 3.0; a(1, 2) = Complex(0.0, 0.5); a(2, 1) = Complex(0.0, -0.5);
        a(2, 2) = -1.0;
        const ComplexMatrix c = func_hermitian(a, HermFunc::Cos, 0, tol);
        const ComplexMatrix s = func_hermitian(a, HermFunc::Sin, 0, tol);
        const ComplexMatrix pythagoras = add(mul(c, c), mul(s, s));
        CounterexampleResult r;
        r.name = "pythagorean_identity";
        const double defect =
            frobenius_norm(sub(pythagoras, ComplexMatrix::identity(3)));
        r.claims.push_back(claim("cos^2 A + sin^2 A = I",
                                 Verdict::IsTrue,
                                 defect <= tol.tol_eq * 3.0 ? Verdict::IsTrue : Verdict::IsFalse));
        r.claims.push_back(
            claim("|cos A| + |sin A| invertible", Verdict::IsTrue,
                  is_invertible(add(matrix_abs(c, tol), matrix_abs(s, tol)), tol)));
        push(std::move(r));
    }
    {
        // multiplication by x on a grid touching 0: AB >= 0 but not invertible,
        // and A^2 + B^2 is not invertible either
        const int n = 8;
        std::vector<Complex> d;
        for (int k = 0; k < n; ++k) d.emplace_back(static_cast<double>(k) / n, 0.0);
        const ComplexMatrix a = ComplexMatrix::diag(d);
        CounterexampleResult r;
        r.name = "multiplication_grid_touching_zero";
        const ComplexMatrix ab = mul(a, a);
        r.claims.push_back(claim("AB positive", Verdict::IsTrue,
                                 classify(ab, tol).positive ? Verdict::IsTrue : Verdict::IsFalse));
        r.claims.push_back(claim("AB invertible", Verdict::IsFalse, is_invertible(ab, tol)));
        r.claims.push_back(claim("|A*|^2 + |B|^2 invertible", Verdict::IsFalse,
                                 is_invertible(scale(ab, 2.0), tol)));
        push(std::move(r));
    }
    return out;
}

}  // namespace opcheck
