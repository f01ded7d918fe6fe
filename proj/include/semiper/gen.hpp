#pragma once

#include "semiper/matrix.hpp"
#include "semiper/rng.hpp"

namespace semiper {

enum class GenProfile {
    dense,            // generator-drawn entries everywhere
    sparse,           // entries replaced by the semiring zero with a fixed probability
    star,             // dominance-condition matrices by construction, no rejection sampling
    comparable_pair,  // the A + noise half of a comparable pair (see gen_comparable_pair)
};

/// Deterministic instance description: the same spec always regenerates the
/// identical matrix.
struct GenSpec {
    Semiring ring;
    std::size_t n = 3;
    std::uint64_t seed = 0;
    GenProfile profile = GenProfile::dense;
    unsigned zero_percent = 25;  // sparse profile only
};

/// One generator-drawn carrier element. Rational carriers draw values with
/// small bounded denominators so permanent arithmetic stays readable.
Element gen_element(const Semiring& s, Rng& rng);

/// Uniform random permutation (Fisher-Yates on the deterministic stream).
Permutation gen_permutation(std::size_t n, Rng& rng);

Matrix gen_matrix(const GenSpec& spec);

/// (A, A + noise): two gen_matrix calls sharing the spec's seed, the second
/// on the derived stream. mat_leq(first, second) holds by construction.
std::pair<Matrix, Matrix> gen_comparable_pair(const GenSpec& spec);

}  // namespace semiper
