#include "repdet/rational.hpp"

#include <cctype>
#include <ostream>

#include "repdet/errors.hpp"

namespace repdet {

namespace {

bool is_decimal(std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

Integer parse_integer(std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return Integer(std::string(s), 10);
}

}  // namespace

Rational Rational::normalize(const Integer& num, const Integer& den) {
    if (den == 0) throw ZeroDenominator("rational with zero denominator");
    Rational r;
    r.value_ = mpq_class(num, den);
    r.value_.canonicalize();
    return r;
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!is_decimal(text, true)) throw ParseError("not a rational: '" + std::string(text) + "'");
        return Rational(parse_integer(text));
    }
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!is_decimal(num, true) || !is_decimal(den, false)) {
        throw ParseError("not a rational: '" + std::string(text) + "'");
    }
    return normalize(parse_integer(num), parse_integer(den));
}

std::string Rational::to_string() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero("rational division by zero");
    value_ /= o.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational inverse(const Rational& r) { return Rational(1) / r; }

Rational pow(const Rational& a, unsigned e) {
    Rational result(1);
    Rational base = a;
    while (e != 0) {
        if (e & 1U) result *= base;
        base *= base;
        e >>= 1U;
    }
    return result;
}

}  // namespace repdet
