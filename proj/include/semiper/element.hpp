#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "semiper/errors.hpp"

namespace semiper {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// One exact value in some semiring carrier. The payload is a tagged union:
/// a boolean bit, a rational in lowest terms, the max-plus bottom (the
/// additive identity, conventionally written -inf), or a positive divisor.
/// Elements are immutable values; equality is exact and structural.
class Element {
public:
    enum class Kind : unsigned char { boolean, rational, bottom, divisor };

    static Element of_bool(bool b) { return Element(Payload(std::in_place_index<0>, b)); }
    static Element of_rational(Rational r) { return Element(Payload(std::in_place_index<1>, std::move(r))); }
    static Element of_rational(long long num, long long den = 1) {
        return of_rational(Rational(Int(num), Int(den)));
    }
    static Element bottom() { return Element(Payload(std::in_place_index<2>)); }
    static Element of_divisor(std::int64_t d) { return Element(Payload(std::in_place_index<3>, d)); }

    Kind kind() const { return static_cast<Kind>(payload_.index()); }
    bool is_bottom() const { return kind() == Kind::bottom; }

    bool as_bool() const { return get<0>("boolean"); }
    const Rational& as_rational() const { return get<1>("rational"); }
    std::int64_t as_divisor() const { return get<3>("divisor"); }

    bool operator==(const Element& other) const = default;

    /// Canonical textual encoding: "0"/"1" for booleans, "p/q" (or the bare
    /// integer when q = 1) in lowest terms for rationals, "-inf" for the
    /// max-plus bottom, the decimal integer for divisors.
    std::string str() const;

private:
    using Payload = std::variant<bool, Rational, std::monostate, std::int64_t>;

    explicit Element(Payload p) : payload_(std::move(p)) {}

    template <std::size_t I>
    const auto& get(const char* want) const {
        if (payload_.index() != I)
            throw CarrierMismatchError(std::string("element is not of kind ") + want);
        return std::get<I>(payload_);
    }

    Payload payload_;
};

/// Parse a rational from "p/q", a bare integer, or a finite decimal such as
/// "0.25" (converted exactly). Throws ParseError on anything else.
Rational parse_rational(std::string_view text);

std::string rational_str(const Rational& r);

}  // namespace semiper
