#include "semiper/gen.hpp"

#include <numeric>

namespace semiper {

namespace {

Rational rat(std::uint64_t num, std::uint64_t den) { return Rational(Int(num), Int(den)); }

/// Rational in [0,1] with denominator at most 10.
Rational unit_fraction(Rng& rng) {
    const std::uint64_t den = 1 + rng.below(10);
    return rat(rng.below(den + 1), den);
}

std::vector<std::int64_t> divisors_of(std::int64_t n) {
    std::vector<std::int64_t> small, large;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

/// Off-diagonal draw below a given diagonal value, per carrier:
/// numeric carriers scale by a unit fraction, max-plus subtracts a
/// non-negative amount (or drops to bottom), lattices pick a divisor.
Element below_diagonal(const Semiring& s, const Element& diag, Rng& rng) {
    switch (s.id()) {
        case SemiringId::boolean:
            return diag.as_bool() ? Element::of_bool(rng.below(2) != 0) : diag;
        case SemiringId::fuzzy_maxmin:
        case SemiringId::fuzzy_maxprod:
        case SemiringId::lukasiewicz:
        case SemiringId::max_times:
            return Element::of_rational(diag.as_rational() * unit_fraction(rng));
        case SemiringId::max_plus: {
            if (rng.percent(10)) return Element::bottom();
            const Rational drop = rat(rng.below(21), 1 + rng.below(4));
            return Element::of_rational(diag.as_rational() - drop);
        }
        case SemiringId::divisor_lattice: {
            const auto divs = divisors_of(diag.as_divisor());
            return Element::of_divisor(divs[rng.below(divs.size())]);
        }
    }
    throw Error("unreachable semiring id");
}

Element star_diagonal(const Semiring& s, Rng& rng) {
    switch (s.id()) {
        case SemiringId::boolean: return Element::of_bool(rng.below(4) != 0);
        case SemiringId::max_plus: {
            // Finite on purpose: a bottom diagonal would force the all-bottom matrix.
            const std::int64_t num = static_cast<std::int64_t>(rng.below(41)) - 20;
            return Element::of_rational(Rational(Int(num), Int(1 + rng.below(4))));
        }
        default: return gen_element(s, rng);
    }
}

}  // namespace

Element gen_element(const Semiring& s, Rng& rng) {
    switch (s.id()) {
        case SemiringId::boolean: return Element::of_bool(rng.below(2) != 0);
        case SemiringId::fuzzy_maxmin:
        case SemiringId::fuzzy_maxprod:
        case SemiringId::lukasiewicz: return Element::of_rational(unit_fraction(rng));
        case SemiringId::max_times:
            return Element::of_rational(rat(rng.below(21), 1 + rng.below(10)));
        case SemiringId::max_plus: {
            const std::int64_t num = static_cast<std::int64_t>(rng.below(41)) - 20;
            return Element::of_rational(Rational(Int(num), Int(1 + rng.below(4))));
        }
        case SemiringId::divisor_lattice: {
            const auto divs = divisors_of(s.divisor_modulus());
            return Element::of_divisor(divs[rng.below(divs.size())]);
        }
    }
    throw Error("unreachable semiring id");
}

Permutation gen_permutation(std::size_t n, Rng& rng) {
    std::vector<std::size_t> images(n);
    std::iota(images.begin(), images.end(), 1);
    for (std::size_t i = n; i > 1; --i)
        std::swap(images[i - 1], images[rng.below(i)]);
    return Permutation::of_images(std::move(images));
}

Matrix gen_matrix(const GenSpec& spec) {
    if (spec.n < 1) throw PreconditionError("generator needs n >= 1");
    const Semiring& s = spec.ring;
    Rng rng(spec.seed);
    const std::size_t n = spec.n;

    switch (spec.profile) {
        case GenProfile::dense:
        case GenProfile::sparse: {
            std::vector<Element> entries;
            entries.reserve(n * n);
            for (std::size_t i = 0; i < n * n; ++i) {
                if (spec.profile == GenProfile::sparse && rng.percent(spec.zero_percent))
                    entries.push_back(s.zero());
                else
                    entries.push_back(gen_element(s, rng));
            }
            return Matrix(s, n, n, std::move(entries));
        }
        case GenProfile::star: {
            const Element diag = star_diagonal(s, rng);
            std::vector<Element> entries;
            entries.reserve(n * n);
            for (std::size_t i = 1; i <= n; ++i)
                for (std::size_t j = 1; j <= n; ++j)
                    entries.push_back(i == j ? diag : below_diagonal(s, diag, rng));
            return Matrix(s, n, n, std::move(entries));
        }
        case GenProfile::comparable_pair: {
            GenSpec base = spec;
            base.profile = GenProfile::dense;
            GenSpec noise = base;
            noise.seed = derive_seed(spec.seed);
            return mat_add(gen_matrix(base), gen_matrix(noise));
        }
    }
    throw PreconditionError("unknown generator profile");
}

std::pair<Matrix, Matrix> gen_comparable_pair(const GenSpec& spec) {
    GenSpec lo = spec;
    lo.profile = GenProfile::dense;
    GenSpec hi = spec;
    hi.profile = GenProfile::comparable_pair;
    return {gen_matrix(lo), gen_matrix(hi)};
}

}  // namespace semiper
