#include <doctest.h>

#include <cmath>

#include "opcheck/generators.hpp"
#include "opcheck/matcore.hpp"

using namespace opcheck;

TEST_CASE("prng streams are deterministic and seed-sensitive") {
    Prng a(12345), b(12345), c(54321);
    bool any_diff = false;
    for (int i = 0; i < 64; ++i) {
        const uint64_t va = a.next_u64();
        CHECK(va == b.next_u64());
        if (va != c.next_u64()) any_diff = true;
    }
    CHECK(any_diff);

    Prng u(7);
    for (int i = 0; i < 1000; ++i) {
        const double x = u.next_uniform();
        CHECK(x >= 0.0);
        CHECK(x < 1.0);
        const int k = u.next_int(-3, 3);
        CHECK(k >= -3);
        CHECK(k <= 3);
    }
}

TEST_CASE("mix_seed separates suite and trial lanes") {
    CHECK(mix_seed(42, 1, 2) == mix_seed(42, 1, 2));
    CHECK(mix_seed(42, 1, 2) != mix_seed(42, 2, 1));
    CHECK(mix_seed(42, 1, 2) != mix_seed(43, 1, 2));
    CHECK(mix_seed(0, 0, 0) != 0);
}

TEST_CASE("gen is bit-identical for identical specs") {
    const GeneratorSpec spec{GenKind::Generic, 6, 999, 1.3};
    CHECK(gen(spec) == gen(spec));
    const GeneratorSpec pair_spec{GenKind::CommutingPair, 5, 999, 1.0};
    const auto [a1, b1] = gen_pair(pair_spec);
    const auto [a2, b2] = gen_pair(pair_spec);
    CHECK(a1 == a2);
    CHECK(b1 == b2);
    CHECK(gen_vector(8, 5) == gen_vector(8, 5));
}

TEST_CASE("single kinds produce the advertised structure") {
    const Tolerances tol;
    for (uint64_t seed = 1; seed <= 12; ++seed) {
        const int dim = 2 + static_cast<int>(seed % 7);

        const ComplexMatrix h = gen({GenKind::Hermitian, dim, seed, 1.0});
        CHECK(classify(h).hermitian);

        const ComplexMatrix p = gen({GenKind::Psd, dim, seed, 1.0});
        const auto pf = classify(p);
        CHECK(pf.hermitian);
        CHECK(pf.positive);

        const ComplexMatrix pd = gen({GenKind::Posdef, dim, seed, 1.0});
        CHECK(classify(pd).positive);
        CHECK(is_invertible(pd) == Verdict::IsTrue);
        CHECK(hermitian_eigh(pd).eigenvalues.front() > 0.0);

        const ComplexMatrix nm = gen({GenKind::Normal, dim, seed, 1.0});
        CHECK(classify(nm).normal);

        const ComplexMatrix u = gen({GenKind::Unitary, dim, seed, 1.0});
        CHECK(classify(u).unitary);
        CHECK(frobenius_norm(sub(mul(adjoint(u), u), ComplexMatrix::identity(dim))) <=
              1e-11 * dim);
    }
}

TEST_CASE("pair kinds commute and carry the advertised structure") {
    for (uint64_t seed = 1; seed <= 12; ++seed) {
        const int dim = 2 + static_cast<int>(seed % 6);

        const auto [a, b] = gen_pair({GenKind::CommutingPair, dim, seed, 1.0});
        CHECK(frobenius_norm(sub(mul(a, b), mul(b, a))) <=
              1e-11 * std::max(1.0, op_norm(a) * op_norm(b)));

        const auto [s, t] = gen_pair({GenKind::CommutingNormalPair, dim, seed, 1.0});
        CHECK(classify(s).normal);
        CHECK(classify(t).normal);
        CHECK(frobenius_norm(sub(mul(s, t), mul(t, s))) <=
              1e-11 * std::max(1.0, op_norm(s) * op_norm(t)));

        const auto [p, q] = gen_pair({GenKind::PositiveCommutingPair, dim, seed, 1.0});
        CHECK(classify(p).positive);
        CHECK(classify(q).positive);
        CHECK(frobenius_norm(sub(mul(p, q), mul(q, p))) <=
              1e-11 * std::max(1.0, op_norm(p) * op_norm(q)));
    }
}

TEST_CASE("scale controls the operator norm") {
    for (uint64_t seed = 1; seed <= 8; ++seed) {
        for (const double target : {0.5, 1.0, 3.0}) {
            const ComplexMatrix m = gen({GenKind::Generic, 6, seed, target});
            CHECK(op_norm(m) >= 0.9 * target);
            CHECK(op_norm(m) <= 1.1 * target);
            const ComplexMatrix h = gen({GenKind::Hermitian, 6, seed, target});
            CHECK(op_norm(h) >= 0.9 * target);
            CHECK(op_norm(h) <= 1.1 * target);
        }
    }
}

TEST_CASE("gen and gen_pair reject mismatched kinds") {
    CHECK_THROWS_AS(gen({GenKind::CommutingPair, 4, 1, 1.0}), KernelError);
    CHECK_THROWS_AS(gen_pair({GenKind::Hermitian, 4, 1, 1.0}), KernelError);
    CHECK_THROWS_AS(gen({GenKind::Generic, 0, 1, 1.0}), KernelError);
}

TEST_CASE("kind name round trip") {
    for (const GenKind k :
         {GenKind::Generic, GenKind::Hermitian, GenKind::Psd, GenKind::Posdef,
          GenKind::Normal, GenKind::Unitary, GenKind::CommutingPair,
          GenKind::CommutingNormalPair, GenKind::PositiveCommutingPair}) {
        CHECK(gen_kind_from_name(gen_kind_name(k)) == k);
        CHECK(kind_is_pair(k) == (k == GenKind::CommutingPair ||
                                  k == GenKind::CommutingNormalPair ||
                                  k == GenKind::PositiveCommutingPair));
    }
    CHECK_THROWS_AS(gen_kind_from_name("bogus"), KernelError);
}
