#include "cantor/decimal.hpp"

#include <cctype>
#include <mutex>

namespace cantor {

struct DecimalStream::State {
    std::mutex mutex;
    std::vector<std::uint8_t> cache;
    DigitSource source;
};

DecimalStream::DecimalStream(bool negative, Natural integer_magnitude, DigitSource source)
    : negative_(negative),
      integer_magnitude_(std::move(integer_magnitude)),
      state_(std::make_shared<State>()) {
    state_->source = std::move(source);
}

DecimalStream DecimalStream::terminating(bool negative, Natural integer_magnitude, std::string_view digits) {
    std::string owned(digits);
    bool all_zero = integer_magnitude.is_zero();
    for (char c : owned) {
        if (c < '0' || c > '9') throw DomainError(std::string("not a decimal digit: '") + c + "'");
        if (c != '0') all_zero = false;
    }
    if (all_zero) negative = false;
    std::size_t next = 0;
    return DecimalStream(negative, std::move(integer_magnitude),
                         [owned = std::move(owned), next]() mutable -> std::uint8_t {
                             if (next < owned.size()) return static_cast<std::uint8_t>(owned[next++] - '0');
                             return 0;
                         });
}

DecimalStream DecimalStream::parse(std::string_view text) {
    std::string_view body = text;
    // Trailing ellipsis marker, ASCII or UTF-8 U+2026.
    if (body.ends_with("\xE2\x80\xA6")) {
        body.remove_suffix(3);
    } else if (body.ends_with("...")) {
        body.remove_suffix(3);
    }

    std::size_t pos = 0;
    bool negative = false;
    if (pos < body.size() && (body[pos] == '-' || body[pos] == '+')) {
        negative = body[pos] == '-';
        ++pos;
    }
    std::size_t int_start = pos;
    while (pos < body.size() && std::isdigit(static_cast<unsigned char>(body[pos]))) ++pos;
    if (pos == int_start) throw ParseError("expected integer digits", pos);
    Natural magnitude = Natural::parse(body.substr(int_start, pos - int_start));

    std::string_view frac;
    if (pos < body.size() && body[pos] == '.') {
        ++pos;
        std::size_t frac_start = pos;
        while (pos < body.size() && std::isdigit(static_cast<unsigned char>(body[pos]))) ++pos;
        frac = body.substr(frac_start, pos - frac_start);
    }
    if (pos != body.size()) throw ParseError("unexpected character in decimal", pos);
    return terminating(negative, std::move(magnitude), frac);
}

Integer DecimalStream::integer_part() const {
    Integer i(integer_magnitude_);
    return negative_ ? -i : i;
}

std::uint8_t DecimalStream::digit(std::size_t position) const {
    if (position == 0) throw DomainError("fractional digit positions start at 1");
    std::lock_guard lock(state_->mutex);
    auto& cache = state_->cache;
    while (cache.size() < position) {
        std::uint8_t d = state_->source();
        if (d > 9) throw Error("digit source produced " + std::to_string(d));
        cache.push_back(d);
    }
    return cache[position - 1];
}

std::string DecimalStream::digits(std::size_t count) const {
    std::string out;
    out.reserve(count);
    if (count > 0) digit(count);  // fill the cache in one locked pass
    for (std::size_t k = 1; k <= count; ++k) out.push_back(static_cast<char>('0' + digit(k)));
    return out;
}

std::string DecimalStream::to_string(std::size_t count) const {
    std::string out = negative_ ? "-" : "";
    out += integer_magnitude_.str();
    if (count > 0) {
        out += '.';
        out += digits(count);
    }
    return out;
}

Rational DecimalStream::truncation(std::size_t count) const {
    Natural scale = pow10(count);
    Natural scaled = integer_magnitude_ * scale;
    if (count > 0) scaled += Natural::parse(digits(count));
    Integer num(scaled);
    return Rational(negative_ ? -num : num, Integer(scale));
}

DecimalStream rational_to_decimal(const Rational& r) {
    Natural den = r.denominator();
    Natural mag = r.numerator().magnitude();
    Natural whole = mag / den;
    Natural remainder = mag % den;
    return DecimalStream(r.sign() == Sign::negative, std::move(whole),
                         [remainder, den]() mutable -> std::uint8_t {
                             Natural shifted = remainder * Natural(10);
                             Natural d = shifted / den;
                             remainder = shifted % den;
                             return static_cast<std::uint8_t>(d.to_u64());
                         });
}

namespace {

// Classical pencil-and-paper root extraction over base-100 digit pairs.
struct RootExtractor {
    BigInt root = 0;
    BigInt remainder = 0;

    std::uint8_t feed(unsigned pair) {
        BigInt current = remainder * 100 + pair;
        BigInt base = root * 20;
        unsigned x = 0;
        while ((base + (x + 1)) * (x + 1) <= current) ++x;
        remainder = current - (base + x) * x;
        root = root * 10 + x;
        return static_cast<std::uint8_t>(x);
    }
};

}  // namespace

DecimalStream sqrt_decimal(const Natural& n) {
    std::string digits = n.str();
    if (digits.size() % 2 == 1) digits.insert(digits.begin(), '0');

    RootExtractor extractor;
    for (std::size_t i = 0; i < digits.size(); i += 2) {
        extractor.feed(static_cast<unsigned>((digits[i] - '0') * 10 + (digits[i + 1] - '0')));
    }
    Natural whole(extractor.root);
    return DecimalStream(false, std::move(whole),
                         [extractor]() mutable -> std::uint8_t { return extractor.feed(0); });
}

std::vector<Rational> approximation_sequence(const DecimalStream& s, std::size_t count) {
    if (count == 0) throw DomainError("approximation_sequence needs count >= 1");
    std::vector<Rational> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) out.push_back(s.truncation(k));
    return out;
}

bool decimal_prefix_equal(const DecimalStream& a, const DecimalStream& b, std::size_t k) {
    if (a.negative() != b.negative() || a.integer_magnitude() != b.integer_magnitude()) return false;
    for (std::size_t pos = 1; pos <= k; ++pos) {
        if (a.digit(pos) != b.digit(pos)) return false;
    }
    return true;
}

}  // namespace cantor
