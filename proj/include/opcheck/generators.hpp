#pragma once

#include "opcheck/types.hpp"

namespace opcheck {

/// Counter-based 64-bit generator (splitmix64 stream). Each (suite, trial)
/// derives an independent subseed through mix_seed, so parallel execution
/// cannot change the sample stream.
class Prng {
  public:
    explicit Prng(uint64_t seed) : state_(seed) {}

    uint64_t next_u64();
    /// Uniform in [0, 1).
    double next_uniform();
    /// Standard complex Gaussian via the Box-Muller transform.
    Complex next_gaussian();
    /// Uniform integer in [lo, hi].
    int next_int(int lo, int hi);

  private:
    uint64_t state_;
};

/// Fixed mixing function deriving a per-trial subseed from (master, suite, trial).
uint64_t mix_seed(uint64_t master, uint64_t suite, uint64_t trial);

enum class GenKind {
    Generic,
    Hermitian,
    Psd,
    Posdef,
    Normal,
    Unitary,
    CommutingPair,
    CommutingNormalPair,
    PositiveCommutingPair,
};

struct GeneratorSpec {
    GenKind kind = GenKind::Generic;
    int dim = 2;
    uint64_t seed = 0;
    double scale = 1.0;  // target operator norm
};

bool kind_is_pair(GenKind k);

/// Single-matrix kinds. Throws for pair kinds.
ComplexMatrix gen(const GeneratorSpec& spec);
/// Pair kinds. Throws for single kinds.
std::pair<ComplexMatrix, ComplexMatrix> gen_pair(const GeneratorSpec& spec);

ComplexVector gen_vector(int dim, uint64_t seed);

// Building blocks reused by the theorem checks for bespoke fixtures.

/// Orthonormalization of a seeded Gaussian matrix (Gram-Schmidt with
/// re-orthogonalization).
ComplexMatrix gen_unitary(int dim, uint64_t seed);
/// U diag(d) U*.
ComplexMatrix assemble_normal(const ComplexMatrix& u, const std::vector<Complex>& d);

const char* gen_kind_name(GenKind k);
GenKind gen_kind_from_name(const std::string& name);

}  // namespace opcheck
