#include "cantor/numbers.hpp"

#include <cctype>
#include <limits>
#include <ostream>

namespace cantor {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

BigInt parse_digits(std::string_view s, std::size_t offset) {
    if (!all_digits(s)) {
        std::size_t bad = 0;
        while (bad < s.size() && std::isdigit(static_cast<unsigned char>(s[bad]))) ++bad;
        throw ParseError(s.empty() ? "expected digits" : "expected a decimal digit", offset + bad);
    }
    auto first = s.find_first_not_of('0');
    if (first == std::string_view::npos) return BigInt(0);
    return BigInt(std::string(s.substr(first)));
}

}  // namespace

Natural::Natural(BigInt v) : value_(std::move(v)) {
    if (value_.sign() < 0) throw DomainError("Natural cannot be negative: " + value_.str());
}

Natural Natural::parse(std::string_view text) {
    return Natural(parse_digits(text, 0));
}

std::uint64_t Natural::to_u64() const {
    if (value_ > std::numeric_limits<std::uint64_t>::max()) {
        throw DomainError("value too large for a 64-bit count: " + str());
    }
    return value_.convert_to<std::uint64_t>();
}

Natural operator-(const Natural& a, const Natural& b) {
    if (b > a) throw DomainError("Natural subtraction below zero: " + a.str() + " - " + b.str());
    return Natural(BigInt(a.value_ - b.value_));
}

Natural operator/(const Natural& a, const Natural& b) {
    if (b.is_zero()) throw DomainError("division by zero");
    return Natural(BigInt(a.value_ / b.value_));
}

Natural operator%(const Natural& a, const Natural& b) {
    if (b.is_zero()) throw DomainError("division by zero");
    return Natural(BigInt(a.value_ % b.value_));
}

Integer Integer::parse(std::string_view text) {
    std::size_t offset = 0;
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        offset = 1;
    }
    BigInt v = parse_digits(text.substr(offset), offset);
    return Integer(negative ? BigInt(-v) : v);
}

Sign Integer::sign() const noexcept {
    int s = value_.sign();
    return s < 0 ? Sign::negative : (s == 0 ? Sign::zero : Sign::positive);
}

DivMod divmod(const Integer& a, const Integer& b) {
    if (b.is_zero()) throw DomainError("division by zero");
    BigInt q, r;
    boost::multiprecision::divide_qr(a.value(), b.value(), q, r);
    return {Integer(std::move(q)), Integer(std::move(r))};
}

Natural to_natural(const Integer& n) {
    if (n.sign() == Sign::negative) throw DomainError("expected a nonnegative value, got " + n.str());
    return Natural(n.value());
}

Natural gcd(const Natural& a, const Natural& b) {
    return Natural(BigInt(boost::multiprecision::gcd(a.value(), b.value())));
}

Natural pow10(std::size_t exponent) {
    return Natural(BigInt(boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(exponent))));
}

Rational::Rational(const Integer& num, const Integer& den) {
    if (den.is_zero()) throw DomainError("rational with zero denominator");
    BigInt n = num.value();
    BigInt d = den.value();
    if (d.sign() < 0) {
        n = -n;
        d = -d;
    }
    BigInt g = boost::multiprecision::gcd(n, d);
    // gcd(0, d) == d, which reduces zero to 0/1.
    num_ = Integer(BigInt(n / g));
    den_ = Natural(BigInt(d / g));
}

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(Integer::parse(text));
    Integer num = Integer::parse(text.substr(0, slash));
    Integer den;
    try {
        den = Integer::parse(text.substr(slash + 1));
    } catch (const ParseError& e) {
        throw ParseError("malformed denominator", slash + 1 + e.position());
    }
    if (den.is_zero()) throw ParseError("zero denominator", slash + 1);
    return Rational(num, den);
}

std::string Rational::str() const {
    return num_.str() + "/" + den_.str();
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * Integer(b.den_) + b.num_ * Integer(a.den_), Integer(a.den_ * b.den_));
}

Rational operator-(const Rational& a, const Rational& b) {
    return a + (-b);
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, Integer(a.den_ * b.den_));
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return (a.num_ * Integer(b.den_)) <=> (b.num_ * Integer(a.den_));
}

Rational abs(const Rational& r) {
    return r.sign() == Sign::negative ? -r : r;
}

std::ostream& operator<<(std::ostream& os, const Natural& n) { return os << n.str(); }
std::ostream& operator<<(std::ostream& os, const Integer& n) { return os << n.str(); }
std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace cantor
