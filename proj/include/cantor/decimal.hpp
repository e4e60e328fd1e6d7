#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "cantor/numbers.hpp"

namespace cantor {

/// A real number as a lazy, infinite decimal expansion.
///
/// Sign-magnitude: `negative()` applies to the whole value, and the integer
/// magnitude and fractional digits are those of |x|. So -1.2 is stored as
/// negative, magnitude 1, digits 2,0,0,... and -0.5 as negative, magnitude 0,
/// digits 5,0,0,...
///
/// Digits are pulled from a source on demand and cached; copies share the
/// cache. Access is internally synchronized, so a stream may be read from
/// several threads, but the source itself is only ever called under the lock
/// and in position order.
class DecimalStream {
public:
    /// Yields fractional digits 1, 2, 3, ... in order, each in 0..9.
    using DigitSource = std::function<std::uint8_t()>;

    DecimalStream(bool negative, Natural integer_magnitude, DigitSource source);

    /// A terminating expansion: the given digits followed by an all-0 tail.
    static DecimalStream terminating(bool negative, Natural integer_magnitude, std::string_view digits);

    /// Textual form: optional sign, integer digits, optionally '.' and
    /// fractional digits, optionally a trailing "..." or U+2026 marker.
    /// The listed digits are followed by an all-0 tail.
    static DecimalStream parse(std::string_view text);

    bool negative() const noexcept { return negative_; }
    const Natural& integer_magnitude() const noexcept { return integer_magnitude_; }
    /// Signed integer part. For -0.5 this is 0; check negative() for the sign.
    Integer integer_part() const;

    /// Fractional digit at `position` (1-based). Throws DomainError for position 0.
    std::uint8_t digit(std::size_t position) const;

    /// The first `count` fractional digits as a string of '0'..'9'.
    std::string digits(std::size_t count) const;

    /// "-1.20" style rendering with `count` fractional digits (no '.' when 0).
    std::string to_string(std::size_t count) const;

    /// The value truncated after `count` fractional digits, canonicalized.
    Rational truncation(std::size_t count) const;

private:
    struct State;

    bool negative_ = false;
    Natural integer_magnitude_;
    std::shared_ptr<State> state_;
};

/// Long-division expansion of r. Never produces an all-9 tail.
DecimalStream rational_to_decimal(const Rational& r);

/// Digit-by-digit square root: for every k the truncation t after k digits
/// satisfies t^2 <= n < (t + 10^-k)^2.
DecimalStream sqrt_decimal(const Natural& n);

/// Truncations after 0, 1, ..., count-1 fractional digits. Throws DomainError
/// if count is 0.
std::vector<Rational> approximation_sequence(const DecimalStream& s, std::size_t count);

/// Same sign, same integer magnitude and same first k fractional digits.
bool decimal_prefix_equal(const DecimalStream& a, const DecimalStream& b, std::size_t k);

}  // namespace cantor
