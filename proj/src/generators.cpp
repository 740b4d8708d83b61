#include "opcheck/generators.hpp"

#include <cmath>
#include <numbers>

#include "opcheck/matcore.hpp"

namespace opcheck {

namespace {

uint64_t splitmix64_step(uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

uint64_t Prng::next_u64() { return splitmix64_step(state_); }

double Prng::next_uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

Complex Prng::next_gaussian() {
    const double u1 = 1.0 - next_uniform();  // (0, 1]
    const double u2 = next_uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    return Complex(r * std::cos(theta), r * std::sin(theta));
}

int Prng::next_int(int lo, int hi) {
    const uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(next_u64() % span);
}

uint64_t mix_seed(uint64_t master, uint64_t suite, uint64_t trial) {
    uint64_t s = master;
    s = splitmix64_step(s) ^ (suite * 0xD1B54A32D192ED03ULL);
    s = splitmix64_step(s) ^ (trial * 0x8CB92BA72F3D8DD7ULL);
    return splitmix64_step(s);
}

bool kind_is_pair(GenKind k) {
    return k == GenKind::CommutingPair || k == GenKind::CommutingNormalPair ||
           k == GenKind::PositiveCommutingPair;
}

namespace {

ComplexMatrix gaussian_matrix(int n, Prng& rng) {
    ComplexMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = rng.next_gaussian();
    return m;
}

ComplexMatrix rescale_to_op_norm(const ComplexMatrix& m, double target) {
    const double nrm = op_norm(m);
    if (nrm == 0.0) return m;
    return scale(m, target / nrm);
}

ComplexMatrix gram_schmidt_unitary(const ComplexMatrix& g) {
    const int n = g.dim();
    ComplexMatrix u = g;
    for (int k = 0; k < n; ++k) {
        for (int pass = 0; pass < 2; ++pass) {  // re-orthogonalization pass
            for (int j = 0; j < k; ++j) {
                Complex proj = 0;
                for (int i = 0; i < n; ++i) proj += std::conj(u(i, j)) * u(i, k);
                for (int i = 0; i < n; ++i) u(i, k) -= proj * u(i, j);
            }
        }
        double nrm = 0;
        for (int i = 0; i < n; ++i) nrm += std::norm(u(i, k));
        nrm = std::sqrt(nrm);
        if (nrm < 1e-12)
            throw KernelError(ErrorKind::InvalidArgument, "degenerate Gaussian draw");
        for (int i = 0; i < n; ++i) u(i, k) /= nrm;
    }
    return u;
}

std::vector<Complex> random_complex_diag(int n, Prng& rng, double target_modulus) {
    std::vector<Complex> d(static_cast<size_t>(n));
    double max_mod = 0;
    for (auto& z : d) {
        z = rng.next_gaussian();
        max_mod = std::max(max_mod, std::abs(z));
    }
    if (max_mod > 0)
        for (auto& z : d) z *= target_modulus / max_mod;
    return d;
}

ComplexMatrix poly_of(const ComplexMatrix& m, const std::vector<Complex>& coeffs) {
    ComplexMatrix r = scale(ComplexMatrix::identity(m.dim()), coeffs[0]);
    ComplexMatrix p = ComplexMatrix::identity(m.dim());
    for (size_t k = 1; k < coeffs.size(); ++k) {
        p = mul(p, m);
        r = add(r, scale(p, coeffs[k]));
    }
    return r;
}

}  // namespace

ComplexMatrix gen_unitary(int dim, uint64_t seed) {
    Prng rng(seed);
    return gram_schmidt_unitary(gaussian_matrix(dim, rng));
}

ComplexMatrix assemble_normal(const ComplexMatrix& u, const std::vector<Complex>& d) {
    const int n = u.dim();
    if (static_cast<int>(d.size()) != n)
        throw KernelError(ErrorKind::DimensionMismatch, "assemble_normal: diag length");
    ComplexMatrix r(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Complex s = 0;
            for (int k = 0; k < n; ++k)
                s += u(i, k) * d[static_cast<size_t>(k)] * std::conj(u(j, k));
            r(i, j) = s;
        }
    return r;
}

ComplexMatrix gen(const GeneratorSpec& spec) {
    if (spec.dim < 1) throw KernelError(ErrorKind::InvalidArgument, "gen: dim must be >= 1");
    if (kind_is_pair(spec.kind))
        throw KernelError(ErrorKind::InvalidArgument, "gen: pair kind requires gen_pair");
    Prng rng(mix_seed(spec.seed, 0x67656eULL, static_cast<uint64_t>(spec.kind)));
    switch (spec.kind) {
        case GenKind::Generic:
            return rescale_to_op_norm(gaussian_matrix(spec.dim, rng), spec.scale);
        case GenKind::Hermitian:
            return rescale_to_op_norm(symmetrize(gaussian_matrix(spec.dim, rng)), spec.scale);
        case GenKind::Psd: {
            const ComplexMatrix g = gaussian_matrix(spec.dim, rng);
            return rescale_to_op_norm(symmetrize(mul(adjoint(g), g)), spec.scale);
        }
        case GenKind::Posdef: {
            const ComplexMatrix g = gaussian_matrix(spec.dim, rng);
            const ComplexMatrix p = rescale_to_op_norm(symmetrize(mul(adjoint(g), g)), spec.scale);
            return add(p, scale(ComplexMatrix::identity(spec.dim), 0.1 * spec.scale));
        }
        case GenKind::Normal: {
            const ComplexMatrix u = gram_schmidt_unitary(gaussian_matrix(spec.dim, rng));
            return assemble_normal(u, random_complex_diag(spec.dim, rng, spec.scale));
        }
        case GenKind::Unitary:
            return gram_schmidt_unitary(gaussian_matrix(spec.dim, rng));
        default:
            throw KernelError(ErrorKind::InvalidArgument, "gen: unhandled kind");
    }
}

std::pair<ComplexMatrix, ComplexMatrix> gen_pair(const GeneratorSpec& spec) {
    if (spec.dim < 1) throw KernelError(ErrorKind::InvalidArgument, "gen_pair: dim must be >= 1");
    if (!kind_is_pair(spec.kind))
        throw KernelError(ErrorKind::InvalidArgument, "gen_pair: single kind requires gen");
    Prng rng(mix_seed(spec.seed, 0x67656e70ULL, static_cast<uint64_t>(spec.kind)));
    switch (spec.kind) {
        case GenKind::CommutingNormalPair: {
            const ComplexMatrix u = gram_schmidt_unitary(gaussian_matrix(spec.dim, rng));
            const auto f = random_complex_diag(spec.dim, rng, spec.scale);
            const auto g = random_complex_diag(spec.dim, rng, spec.scale);
            return {assemble_normal(u, f), assemble_normal(u, g)};
        }
        case GenKind::PositiveCommutingPair: {
            const ComplexMatrix u = gram_schmidt_unitary(gaussian_matrix(spec.dim, rng));
            auto f = random_complex_diag(spec.dim, rng, spec.scale);
            auto g = random_complex_diag(spec.dim, rng, spec.scale);
            for (auto& z : f) z = std::abs(z);
            for (auto& z : g) z = std::abs(z);
            return {assemble_normal(u, f), assemble_normal(u, g)};
        }
        case GenKind::CommutingPair: {
            // p(M), q(M) for one generic M: commuting, generically non-normal.
            const ComplexMatrix m =
                rescale_to_op_norm(gaussian_matrix(spec.dim, rng), 1.0);
            std::vector<Complex> p(4), q(4);
            for (auto& z : p) z = rng.next_gaussian();
            for (auto& z : q) z = rng.next_gaussian();
            return {rescale_to_op_norm(poly_of(m, p), spec.scale),
                    rescale_to_op_norm(poly_of(m, q), spec.scale)};
        }
        default:
            throw KernelError(ErrorKind::InvalidArgument, "gen_pair: unhandled kind");
    }
}

ComplexVector gen_vector(int dim, uint64_t seed) {
    if (dim < 1) throw KernelError(ErrorKind::InvalidArgument, "gen_vector: dim must be >= 1");
    Prng rng(mix_seed(seed, 0x766563ULL, 0));
    ComplexVector x(static_cast<size_t>(dim));
    for (auto& z : x) z = rng.next_gaussian();
    return x;
}

const char* gen_kind_name(GenKind k) {
    switch (k) {
        case GenKind::Generic: return "generic";
        case GenKind::Hermitian: return "hermitian";
        case GenKind::Psd: return "psd";
        case GenKind::Posdef: return "posdef";
        case GenKind::Normal: return "normal";
        case GenKind::Unitary: return "unitary";
        case GenKind::CommutingPair: return "commuting_pair";
        case GenKind::CommutingNormalPair: return "commuting_normal_pair";
        case GenKind::PositiveCommutingPair: return "positive_commuting_pair";
    }
    return "unknown";
}

GenKind gen_kind_from_name(const std::string& name) {
    for (GenKind k : {GenKind::Generic, GenKind::Hermitian, GenKind::Psd, GenKind::Posdef,
                      GenKind::Normal, GenKind::Unitary, GenKind::CommutingPair,
                      GenKind::CommutingNormalPair, GenKind::PositiveCommutingPair})
        if (name == gen_kind_name(k)) return k;
    throw KernelError(ErrorKind::InvalidArgument, "unknown generator kind: " + name);
}

}  // namespace opcheck
