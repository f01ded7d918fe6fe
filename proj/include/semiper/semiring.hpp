#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "semiper/element.hpp"
#include "semiper/errors.hpp"

namespace semiper {

enum class SemiringId : unsigned char {
    boolean,
    fuzzy_maxmin,
    fuzzy_maxprod,
    lukasiewicz,
    max_plus,
    max_times,
    divisor_lattice,
};

/// A built-in commutative additively idempotent semiring: the carrier, the
/// two operations, and the canonical order a <= b iff a + b = b.
///
/// Carriers are exact. The numeric ones use arbitrary-precision rationals,
/// the max-plus bottom is a distinct tag (never a sentinel number), and the
/// divisor lattice of N is the set of positive divisors of N with lcm as
/// addition and gcd as multiplication.
class Semiring {
public:
    static Semiring boolean() { return Semiring(SemiringId::boolean, 0); }
    static Semiring fuzzy_maxmin() { return Semiring(SemiringId::fuzzy_maxmin, 0); }
    static Semiring fuzzy_maxprod() { return Semiring(SemiringId::fuzzy_maxprod, 0); }
    static Semiring lukasiewicz() { return Semiring(SemiringId::lukasiewicz, 0); }
    static Semiring max_plus() { return Semiring(SemiringId::max_plus, 0); }
    static Semiring max_times() { return Semiring(SemiringId::max_times, 0); }
    static Semiring divisor_lattice(std::int64_t n);

    /// Parse an id string, e.g. "max_plus" or "divisor_lattice(30)".
    static Semiring from_name(std::string_view name);
    /// All seven built-ins; divisor lattices are instantiated with the given N.
    static std::vector<Semiring> all_builtin(std::int64_t divisor_n = 30);

    SemiringId id() const { return id_; }
    std::int64_t divisor_modulus() const { return modulus_; }
    std::string name() const;

    Element zero() const;
    Element one() const;

    bool contains(const Element& e) const;

    Element add(const Element& a, const Element& b) const;
    Element mul(const Element& a, const Element& b) const;
    /// Canonical order: true iff add(a, b) == b.
    bool leq(const Element& a, const Element& b) const;
    /// k-fold product; k = 0 yields one.
    Element nat_pow(const Element& a, unsigned k) const;

    bool finite_carrier() const;
    /// Every carrier element, ascending; only for finite carriers.
    std::vector<Element> carrier() const;
    /// Default sample set for axiom/incline checks on infinite carriers:
    /// zero, one, and a fixed spread of generator values. Finite carriers
    /// return the whole carrier.
    std::vector<Element> default_samples() const;

    Element parse(std::string_view text) const;
    std::string format(const Element& e) const { return check(e).str(); }

    bool operator==(const Semiring& other) const = default;

private:
    Semiring(SemiringId id, std::int64_t modulus) : id_(id), modulus_(modulus) {}

    const Element& check(const Element& e) const;

    SemiringId id_;
    std::int64_t modulus_;  // divisor_lattice only
};

struct AxiomFailure {
    std::string axiom;
    std::vector<Element> witness;
};

struct AxiomReport {
    std::string semiring;
    std::vector<AxiomFailure> failures;
    std::size_t samples_used = 0;
    bool ok() const { return failures.empty(); }
};

/// Verify the semiring axioms over all triples drawn from `samples`:
/// commutativity, associativity and idempotency of +, commutativity and
/// associativity of *, distributivity on both sides, annihilation by zero,
/// the identities, and one != zero. Requires at least three distinct samples
/// including zero and one. Each failure carries a witness.
AxiomReport check_axioms(const Semiring& s, std::span<const Element> samples);
AxiomReport check_axioms(const Semiring& s);

using BinaryOp = std::function<Element(const Element&, const Element&)>;

/// Same checks against an arbitrary operation table. This is the hook used
/// to demonstrate that the checker rejects broken structures (e.g. ordinary
/// rational addition, which is not idempotent).
AxiomReport check_axioms_with(const std::string& label, const BinaryOp& add, const BinaryOp& mul,
                              const Element& zero, const Element& one,
                              std::span<const Element> samples);

struct InclineReport {
    bool holds = false;
    bool exhaustive = false;  // whole carrier vs. sampled
    std::size_t samples_used = 0;
};

/// Test a + 1 = 1, exhaustively for finite carriers and over `samples`
/// (default samples when empty) otherwise.
InclineReport is_incline(const Semiring& s, std::span<const Element> samples = {});

}  // namespace semiper
