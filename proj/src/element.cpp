#include "semiper/element.hpp"

#include <cctype>

namespace semiper {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

Int parse_int(std::string_view s) {
    bool neg = false;
    if (!s.empty() && s.front() == '-') {
        neg = true;
        s.remove_prefix(1);
    }
    if (!all_digits(s)) throw ParseError("not an integer: '" + std::string(s) + "'");
    Int v(std::string(s));
    return neg ? Int(-v) : v;
}

}  // namespace

std::string rational_str(const Rational& r) {
    const Int& num = boost::multiprecision::numerator(r);
    const Int& den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::string Element::str() const {
    switch (kind()) {
        case Kind::boolean: return as_bool() ? "1" : "0";
        case Kind::rational: return rational_str(as_rational());
        case Kind::bottom: return "-inf";
        case Kind::divisor: return std::to_string(as_divisor());
    }
    throw Error("unreachable element kind");
}

Rational parse_rational(std::string_view text) {
    if (text.empty()) throw ParseError("empty rational");
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        Int num = parse_int(text.substr(0, slash));
        std::string_view den_s = text.substr(slash + 1);
        if (!all_digits(den_s)) throw ParseError("bad denominator in '" + std::string(text) + "'");
        Int den(std::string(den_s));
        if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
        return Rational(num, den);
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view head = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        bool neg = false;
        if (!head.empty() && head.front() == '-') {
            neg = true;
            head.remove_prefix(1);
        }
        if (head.empty() || !all_digits(head) || !all_digits(frac))
            throw ParseError("bad decimal '" + std::string(text) + "'");
        Int scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        Int num = Int(std::string(head)) * scale + Int(std::string(frac));
        Rational r(num, scale);
        return neg ? Rational(-r) : r;
    }
    return Rational(parse_int(text), Int(1));
}

}  // namespace semiper
