#pragma once

#include <cstdint>
#include <random>

namespace semiper {

/// Deterministic pseudo-random stream. mt19937_64 output is pinned by the
/// standard, so the same seed regenerates the same instances on every
/// platform and run. Derived draws avoid std distributions for the same
/// reason.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }
    /// Uniform-ish value in {0 .. bound-1}; bound >= 1.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
    bool percent(unsigned p) { return below(100) < p; }

private:
    std::mt19937_64 gen_;
};

/// Fixed derivation for secondary streams (e.g. the noise half of a
/// comparable pair) so one seed reproducibly yields several streams.
inline std::uint64_t derive_seed(std::uint64_t seed) {
    return seed ^ 0x9e3779b97f4a7c15ULL;
}

}  // namespace semiper
