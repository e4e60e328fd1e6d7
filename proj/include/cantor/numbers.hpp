#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "cantor/error.hpp"

namespace cantor {

using BigInt = boost::multiprecision::cpp_int;

enum class Sign { negative = -1, zero = 0, positive = 1 };

/// Arbitrary-precision nonnegative integer. Houses both N = {1, 2, ...} and N0.
class Natural {
public:
    Natural() = default;

    template <std::integral T>
    Natural(T v) : value_(v) {
        if constexpr (std::is_signed_v<T>) {
            if (v < 0) throw DomainError("Natural cannot be negative: " + std::to_string(v));
        }
    }

    explicit Natural(BigInt v);

    /// Decimal digits only, no sign.
    static Natural parse(std::string_view text);

    const BigInt& value() const noexcept { return value_; }
    bool is_zero() const noexcept { return value_.is_zero(); }
    bool is_even() const { return !boost::multiprecision::bit_test(value_, 0); }
    std::string str() const { return value_.str(); }

    /// Narrowing accessor; throws DomainError if the value does not fit.
    std::uint64_t to_u64() const;

    Natural& operator+=(const Natural& o) { value_ += o.value_; return *this; }
    Natural& operator*=(const Natural& o) { value_ *= o.value_; return *this; }
    Natural& operator++() { ++value_; return *this; }

    friend Natural operator+(Natural a, const Natural& b) { return a += b; }
    friend Natural operator*(Natural a, const Natural& b) { return a *= b; }
    /// Throws DomainError when b > a.
    friend Natural operator-(const Natural& a, const Natural& b);
    /// Floor division; throws DomainError on a zero divisor.
    friend Natural operator/(const Natural& a, const Natural& b);
    friend Natural operator%(const Natural& a, const Natural& b);

    friend bool operator==(const Natural& a, const Natural& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
        return a.value_.compare(b.value_) <=> 0;
    }

private:
    BigInt value_;
};

/// Arbitrary-precision signed integer.
class Integer {
public:
    Integer() = default;

    template <std::integral T>
    Integer(T v) : value_(v) {}

    Integer(const Natural& n) : value_(n.value()) {}
    explicit Integer(BigInt v) : value_(std::move(v)) {}

    /// Optional leading '+' or '-', then decimal digits.
    static Integer parse(std::string_view text);

    const BigInt& value() const noexcept { return value_; }
    Sign sign() const noexcept;
    Natural magnitude() const { return Natural(boost::multiprecision::abs(value_)); }
    bool is_zero() const noexcept { return value_.is_zero(); }
    bool is_even() const { return !boost::multiprecision::bit_test(value_, 0); }
    std::string str() const { return value_.str(); }

    Integer operator-() const { return Integer(BigInt(-value_)); }
    Integer& operator+=(const Integer& o) { value_ += o.value_; return *this; }
    Integer& operator-=(const Integer& o) { value_ -= o.value_; return *this; }
    Integer& operator*=(const Integer& o) { value_ *= o.value_; return *this; }

    friend Integer operator+(Integer a, const Integer& b) { return a += b; }
    friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
    friend Integer operator*(Integer a, const Integer& b) { return a *= b; }

    friend bool operator==(const Integer& a, const Integer& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
        return a.value_.compare(b.value_) <=> 0;
    }

private:
    BigInt value_;
};

/// Result of truncating division: a == quotient * b + remainder, |remainder| < |b|,
/// remainder has the sign of a.
struct DivMod {
    Integer quotient;
    Integer remainder;
};

/// Throws DomainError on a zero divisor.
DivMod divmod(const Integer& a, const Integer& b);

/// If `n` is an Integer >= 0, its Natural value; throws DomainError otherwise.
Natural to_natural(const Integer& n);

Natural gcd(const Natural& a, const Natural& b);
Natural pow10(std::size_t exponent);

/// Exact rational in canonical form: denominator >= 1, gcd(|num|, den) = 1, zero is 0/1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(const Integer& n) : num_(n), den_(1) {}
    template <std::integral T>
    Rational(T v) : Rational(Integer(v)) {}

    /// Reduces to canonical form. Throws DomainError when den == 0.
    Rational(const Integer& num, const Integer& den);

    /// Accepts "p/q" or a bare integer "p". The result is canonicalized.
    static Rational parse(std::string_view text);

    const Integer& numerator() const noexcept { return num_; }
    const Natural& denominator() const noexcept { return den_; }
    Sign sign() const noexcept { return num_.sign(); }
    bool is_integer() const { return den_ == Natural(1); }

    /// Always "p/q", including integers ("3/1", "0/1").
    std::string str() const;

    Rational operator-() const;
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);

    friend bool operator==(const Rational& a, const Rational& b) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    Integer num_;
    Natural den_;
};

Rational abs(const Rational& r);

std::ostream& operator<<(std::ostream& os, const Natural& n);
std::ostream& operator<<(std::ostream& os, const Integer& n);
std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace cantor
