#include "semiper/semiring.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace semiper {

namespace {

const Rational kZero(0);
const Rational kOne(1);

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

Rational rat_of(long long num, long long den = 1) { return Rational(Int(num), Int(den)); }

}  // namespace

Semiring Semiring::divisor_lattice(std::int64_t n) {
    if (n < 2) throw Error("divisor_lattice needs N >= 2 so that one != zero");
    return Semiring(SemiringId::divisor_lattice, n);
}

std::string Semiring::name() const {
    switch (id_) {
        case SemiringId::boolean: return "boolean";
        case SemiringId::fuzzy_maxmin: return "fuzzy_maxmin";
        case SemiringId::fuzzy_maxprod: return "fuzzy_maxprod";
        case SemiringId::lukasiewicz: return "lukasiewicz";
        case SemiringId::max_plus: return "max_plus";
        case SemiringId::max_times: return "max_times";
        case SemiringId::divisor_lattice:
            return "divisor_lattice(" + std::to_string(modulus_) + ")";
    }
    throw Error("unreachable semiring id");
}

Semiring Semiring::from_name(std::string_view name) {
    if (name == "boolean") return boolean();
    if (name == "fuzzy_maxmin") return fuzzy_maxmin();
    if (name == "fuzzy_maxprod") return fuzzy_maxprod();
    if (name == "lukasiewicz") return lukasiewicz();
    if (name == "max_plus") return max_plus();
    if (name == "max_times") return max_times();
    constexpr std::string_view prefix = "divisor_lattice(";
    if (name.starts_with(prefix) && name.ends_with(")")) {
        std::string_view digits = name.substr(prefix.size(), name.size() - prefix.size() - 1);
        std::int64_t n = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
        if (ec != std::errc() || ptr != digits.data() + digits.size() || n < 2)
            throw ParseError("bad divisor lattice modulus in '" + std::string(name) + "'");
        return divisor_lattice(n);
    }
    throw ParseError("unknown semiring '" + std::string(name) + "'");
}

std::vector<Semiring> Semiring::all_builtin(std::int64_t divisor_n) {
    return {boolean(),  fuzzy_maxmin(), fuzzy_maxprod(),           lukasiewicz(),
            max_plus(), max_times(),    divisor_lattice(divisor_n)};
}

Element Semiring::zero() const {
    switch (id_) {
        case SemiringId::boolean: return Element::of_bool(false);
        case SemiringId::max_plus: return Element::bottom();
        case SemiringId::divisor_lattice: return Element::of_divisor(1);
        default: return Element::of_rational(kZero);
    }
}

Element Semiring::one() const {
    switch (id_) {
        case SemiringId::boolean: return Element::of_bool(true);
        case SemiringId::max_plus: return Element::of_rational(kZero);
        case SemiringId::divisor_lattice: return Element::of_divisor(modulus_);
        default: return Element::of_rational(kOne);
    }
}

bool Semiring::contains(const Element& e) const {
    switch (id_) {
        case SemiringId::boolean: return e.kind() == Element::Kind::boolean;
        case SemiringId::fuzzy_maxmin:
        case SemiringId::fuzzy_maxprod:
        case SemiringId::lukasiewicz:
            return e.kind() == Element::Kind::rational && e.as_rational() >= kZero &&
                   e.as_rational() <= kOne;
        case SemiringId::max_plus:
            return e.kind() == Element::Kind::rational || e.kind() == Element::Kind::bottom;
        case SemiringId::max_times:
            return e.kind() == Element::Kind::rational && e.as_rational() >= kZero;
        case SemiringId::divisor_lattice:
            return e.kind() == Element::Kind::divisor && e.as_divisor() >= 1 &&
                   modulus_ % e.as_divisor() == 0;
    }
    return false;
}

const Element& Semiring::check(const Element& e) const {
    if (!contains(e))
        throw CarrierMismatchError("element '" + e.str() + "' is not in the carrier of " + name());
    return e;
}

Element Semiring::add(const Element& a, const Element& b) const {
    check(a);
    check(b);
    switch (id_) {
        case SemiringId::boolean: return Element::of_bool(a.as_bool() || b.as_bool());
        case SemiringId::max_plus:
            if (a.is_bottom()) return b;
            if (b.is_bottom()) return a;
            return a.as_rational() < b.as_rational() ? b : a;
        case SemiringId::divisor_lattice:
            return Element::of_divisor(std::lcm(a.as_divisor(), b.as_divisor()));
        default: return a.as_rational() < b.as_rational() ? b : a;
    }
}

Element Semiring::mul(const Element& a, const Element& b) const {
    check(a);
    check(b);
    switch (id_) {
        case SemiringId::boolean: return Element::of_bool(a.as_bool() && b.as_bool());
        case SemiringId::fuzzy_maxmin:
            return a.as_rational() < b.as_rational() ? a : b;
        case SemiringId::fuzzy_maxprod:
        case SemiringId::max_times:
            return Element::of_rational(a.as_rational() * b.as_rational());
        case SemiringId::lukasiewicz: {
            Rational s = a.as_rational() + b.as_rational() - kOne;
            return Element::of_rational(s < kZero ? kZero : s);
        }
        case SemiringId::max_plus:
            if (a.is_bottom() || b.is_bottom()) return Element::bottom();
            return Element::of_rational(a.as_rational() + b.as_rational());
        case SemiringId::divisor_lattice:
            return Element::of_divisor(std::gcd(a.as_divisor(), b.as_divisor()));
    }
    throw Error("unreachable semiring id");
}

bool Semiring::leq(const Element& a, const Element& b) const { return add(a, b) == b; }

Element Semiring::nat_pow(const Element& a, unsigned k) const {
    check(a);
    Element acc = one();
    for (unsigned i = 0; i < k; ++i) acc = mul(acc, a);
    return acc;
}

bool Semiring::finite_carrier() const {
    return id_ == SemiringId::boolean || id_ == SemiringId::divisor_lattice;
}

std::vector<Element> Semiring::carrier() const {
    switch (id_) {
        case SemiringId::boolean: return {Element::of_bool(false), Element::of_bool(true)};
        case SemiringId::divisor_lattice: {
            std::vector<Element> out;
            for (std::int64_t d : divisors_of(modulus_)) out.push_back(Element::of_divisor(d));
            return out;
        }
        default: throw Error(name() + " has an infinite carrier");
    }
}

std::vector<Element> Semiring::default_samples() const {
    if (finite_carrier()) return carrier();
    auto r = [](long long n, long long d = 1) { return Element::of_rational(rat_of(n, d)); };
    switch (id_) {
        case SemiringId::fuzzy_maxmin:
        case SemiringId::fuzzy_maxprod:
        case SemiringId::lukasiewicz:
            return {r(0), r(1), r(1, 2), r(1, 3), r(2, 3), r(9, 10), r(1, 10), r(3, 4)};
        case SemiringId::max_plus:
            return {Element::bottom(), r(0), r(1), r(-1), r(5), r(1, 2), r(-7, 3), r(10)};
        case SemiringId::max_times:
            return {r(0), r(1), r(1, 2), r(2), r(3, 4), r(10), r(1, 10), r(5, 3)};
        default: throw Error("unreachable semiring id");
    }
}

Element Semiring::parse(std::string_view text) const {
    switch (id_) {
        case SemiringId::boolean:
            if (text == "0") return Element::of_bool(false);
            if (text == "1") return Element::of_bool(true);
            throw ParseError("boolean element must be '0' or '1', got '" + std::string(text) + "'");
        case SemiringId::max_plus:
            if (text == "-inf") return Element::bottom();
            return check(Element::of_rational(parse_rational(text)));
        case SemiringId::divisor_lattice: {
            std::int64_t d = 0;
            auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), d);
            if (ec != std::errc() || ptr != text.data() + text.size())
                throw ParseError("bad divisor '" + std::string(text) + "'");
            return check(Element::of_divisor(d));
        }
        default: return check(Element::of_rational(parse_rational(text)));
    }
}

namespace {

void require_samples(std::span<const Element> samples, const Element& zero, const Element& one) {
    std::vector<Element> distinct;
    for (const Element& e : samples)
        if (std::find(distinct.begin(), distinct.end(), e) == distinct.end())
            distinct.push_back(e);
    bool has_zero = std::find(distinct.begin(), distinct.end(), zero) != distinct.end();
    bool has_one = std::find(distinct.begin(), distinct.end(), one) != distinct.end();
    if (distinct.size() < 3 || !has_zero || !has_one)
        throw PreconditionError("axiom check needs >= 3 distinct samples including zero and one");
}

}  // namespace

AxiomReport check_axioms_with(const std::string& label, const BinaryOp& add, const BinaryOp& mul,
                              const Element& zero, const Element& one,
                              std::span<const Element> samples) {
    require_samples(samples, zero, one);
    AxiomReport report;
    report.semiring = label;
    report.samples_used = samples.size();

    auto fail = [&](const std::string& axiom, std::vector<Element> witness) {
        for (const AxiomFailure& f : report.failures)
            if (f.axiom == axiom) return;  // first witness per axiom is enough
        report.failures.push_back({axiom, std::move(witness)});
    };

    if (one == zero) fail("one_neq_zero", {one});
    for (const Element& a : samples) {
        if (add(a, a) != a) fail("add_idempotent", {a});
        if (add(zero, a) != a) fail("zero_add_identity", {a});
        if (mul(one, a) != a) fail("one_identity", {a});
        if (mul(zero, a) != zero) fail("zero_annihilates", {a});
    }
    for (const Element& a : samples)
        for (const Element& b : samples) {
            if (add(a, b) != add(b, a)) fail("add_commutative", {a, b});
            if (mul(a, b) != mul(b, a)) fail("mul_commutative", {a, b});
        }
    for (const Element& a : samples)
        for (const Element& b : samples)
            for (const Element& c : samples) {
                if (add(add(a, b), c) != add(a, add(b, c))) fail("add_associative", {a, b, c});
                if (mul(mul(a, b), c) != mul(a, mul(b, c))) fail("mul_associative", {a, b, c});
                if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c)))
                    fail("left_distributive", {a, b, c});
                if (mul(add(b, c), a) != add(mul(b, a), mul(c, a)))
                    fail("right_distributive", {a, b, c});
            }
    return report;
}

AxiomReport check_axioms(const Semiring& s, std::span<const Element> samples) {
    auto add = [&s](const Element& a, const Element& b) { return s.add(a, b); };
    auto mul = [&s](const Element& a, const Element& b) { return s.mul(a, b); };
    return check_axioms_with(s.name(), add, mul, s.zero(), s.one(), samples);
}

AxiomReport check_axioms(const Semiring& s) {
    auto samples = s.default_samples();
    return check_axioms(s, samples);
}

InclineReport is_incline(const Semiring& s, std::span<const Element> samples) {
    InclineReport report;
    std::vector<Element> pool;
    if (s.finite_carrier()) {
        pool = s.carrier();
        report.exhaustive = true;
    } else if (samples.empty()) {
        pool = s.default_samples();
    } else {
        pool.assign(samples.begin(), samples.end());
    }
    report.samples_used = pool.size();
    const Element one = s.one();
    report.holds = std::all_of(pool.begin(), pool.end(),
                               [&](const Element& a) { return s.add(a, one) == one; });
    return report;
}

}  // namespace semiper
