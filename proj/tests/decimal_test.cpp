#include <gtest/gtest.h>

#include <random>
#include <thread>

#include "cantor/decimal.hpp"
#include "cantor/json_io.hpp"

using namespace cantor;

namespace {

// Largest t with t*t <= x, by bisection. Shares nothing with the digit-by-digit
// extraction under test.
BigInt isqrt_bisect(const BigInt& x) {
    BigInt lo = 0, hi = x + 1;
    while (hi - lo > 1) {
        BigInt mid = (lo + hi) / 2;
        if (mid * mid <= x) lo = mid;
        else hi = mid;
    }
    return lo;
}

BigInt scaled_prefix(const DecimalStream& s, std::size_t k) {
    std::string text = s.integer_magnitude().str() + s.digits(k);
    return BigInt(text);
}

}  // namespace

TEST(RationalToDecimal, WorkedExpansions) {
    EXPECT_EQ(rational_to_decimal(Rational::parse("1/3")).to_string(5), "0.33333");
    EXPECT_EQ(rational_to_decimal(Rational::parse("5")).to_string(5), "5.00000");
    auto minus = rational_to_decimal(Rational::parse("-6/5"));
    EXPECT_EQ(minus.to_string(5), "-1.20000");
    EXPECT_TRUE(minus.negative());
    EXPECT_EQ(minus.integer_part(), Integer(-1));
    EXPECT_EQ(minus.digit(1), 2);
}

TEST(RationalToDecimal, NegativeBelowOne) {
    auto half = rational_to_decimal(Rational::parse("-1/2"));
    EXPECT_TRUE(half.negative());
    EXPECT_EQ(half.integer_part(), Integer(0));
    EXPECT_EQ(half.to_string(3), "-0.500");
    EXPECT_EQ(half.truncation(1), Rational::parse("-1/2"));
}

TEST(RationalToDecimal, TruncationWithinOneUlp) {
    std::mt19937_64 rng(7);
    for (int q = 1; q <= 10000; q += (q < 200 ? 1 : 37)) {
        std::uniform_int_distribution<int> num(-3 * q, 3 * q);
        Rational r(Integer(num(rng)), Integer(q));
        auto s = rational_to_decimal(r);
        for (std::size_t k : {0u, 1u, 5u, 17u, 30u}) {
            Rational err = abs(s.truncation(k) - r);
            EXPECT_LT(err, Rational(Integer(1), Integer(pow10(k)))) << r << " k=" << k;
        }
    }
}

TEST(RationalToDecimal, NoTrailingNines) {
    for (int q = 1; q <= 10000; q += (q < 500 ? 1 : 53)) {
        for (int p : {1, q / 2 + 1, q - 1, 2 * q + 1}) {
            if (p <= 0) continue;
            auto s = rational_to_decimal(Rational(Integer(p), Integer(q)));
            std::string d = s.digits(200);
            EXPECT_NE(d.substr(150), std::string(50, '9')) << p << "/" << q;
        }
    }
}

TEST(RationalToDecimal, TerminatingCasesEndInZeros) {
    // q = 2^a 5^b terminates after max(a, b) digits.
    for (int a = 0; a <= 6; ++a) {
        for (int b = 0; b <= 6; ++b) {
            int q = (1 << a);
            for (int i = 0; i < b; ++i) q *= 5;
            auto s = rational_to_decimal(Rational(Integer(q - 1 > 0 ? q - 1 : 1), Integer(q)));
            std::size_t len = static_cast<std::size_t>(std::max(a, b));
            std::string d = s.digits(len + 40);
            EXPECT_EQ(d.substr(len), std::string(40, '0')) << "q=" << q;
        }
    }
}

TEST(SqrtDecimal, Examples) {
    EXPECT_EQ(sqrt_decimal(Natural(2)).to_string(5), "1.41421");
    EXPECT_EQ(sqrt_decimal(Natural(4)).to_string(5), "2.00000");
    EXPECT_EQ(sqrt_decimal(Natural(0)).to_string(3), "0.000");
    // Frozen from isqrt_bisect(3 * 10^8) = 17320.
    EXPECT_EQ(isqrt_bisect(BigInt(300000000)), BigInt(17320));
    EXPECT_EQ(sqrt_decimal(Natural(3)).to_string(4), "1.7320");
}

TEST(SqrtDecimal, MatchesBisectionOracle) {
    for (int n = 0; n <= 10000; n += (n < 300 ? 1 : 7)) {
        auto s = sqrt_decimal(Natural(n));
        for (std::size_t k = 0; k <= 20; k += 4) {
            BigInt scaled = BigInt(n) * BigInt(boost::multiprecision::pow(BigInt(10), 2 * static_cast<unsigned>(k)));
            ASSERT_EQ(scaled_prefix(s, k), isqrt_bisect(scaled)) << "n=" << n << " k=" << k;
        }
    }
}

TEST(SqrtDecimal, LargeRadicand) {
    // sqrt(10^40 + 1) = 10^20 + 5e-21 - ..., so the first 20 digits are 0
    // and digit 21 is 4 (the tail of 4.99...e-21).
    auto s = sqrt_decimal(pow10(40) + Natural(1));
    EXPECT_EQ(s.integer_magnitude(), pow10(20));
    EXPECT_EQ(s.digits(21), std::string(20, '0') + "4");
}

TEST(ApproximationSequence, RootTwo) {
    auto seq = approximation_sequence(sqrt_decimal(Natural(2)), 5);
    std::vector<Rational> expected{Rational(1), Rational::parse("7/5"), Rational::parse("141/100"),
                                   Rational::parse("707/500"), Rational::parse("7071/5000")};
    EXPECT_EQ(seq, expected);
    EXPECT_EQ(approximation_sequence(sqrt_decimal(Natural(2)), 1), std::vector<Rational>{Rational(1)});
    EXPECT_THROW(approximation_sequence(sqrt_decimal(Natural(2)), 0), DomainError);
}

TEST(ApproximationSequence, Terminating) {
    auto seq = approximation_sequence(rational_to_decimal(Rational::parse("1/2")), 3);
    std::vector<Rational> expected{Rational(0), Rational::parse("1/2"), Rational::parse("1/2")};
    EXPECT_EQ(seq, expected);
}

TEST(DecimalPrefixEqual, Examples) {
    auto third = rational_to_decimal(Rational::parse("1/3"));
    EXPECT_TRUE(decimal_prefix_equal(third, third, 4));
    EXPECT_FALSE(decimal_prefix_equal(DecimalStream::parse("0.4581"), third, 1));
    EXPECT_TRUE(decimal_prefix_equal(rational_to_decimal(Rational::parse("1/2")), DecimalStream::parse("0.5"), 10));
    EXPECT_TRUE(decimal_prefix_equal(DecimalStream::parse("0.12"), DecimalStream::parse("0.19"), 1));
    EXPECT_FALSE(decimal_prefix_equal(DecimalStream::parse("0.5"), DecimalStream::parse("-0.5"), 0));
    EXPECT_FALSE(decimal_prefix_equal(DecimalStream::parse("1.5"), DecimalStream::parse("2.5"), 0));
}

TEST(DecimalStream, ParseForms) {
    EXPECT_EQ(DecimalStream::parse("0.3333...").to_string(6), "0.333300");
    EXPECT_EQ(DecimalStream::parse("0.3333\xE2\x80\xA6").to_string(4), "0.3333");
    EXPECT_EQ(DecimalStream::parse("-1.2").to_string(2), "-1.20");
    EXPECT_EQ(DecimalStream::parse("7").to_string(1), "7.0");
    EXPECT_EQ(DecimalStream::parse("-0.000").to_string(1), "0.0");
    EXPECT_THROW(DecimalStream::parse(".5"), ParseError);
    EXPECT_THROW(DecimalStream::parse("1.2.3"), ParseError);
    EXPECT_THROW(DecimalStream::parse("abc"), ParseError);
}

TEST(DecimalStream, DigitPositionsStartAtOne) {
    EXPECT_THROW(DecimalStream::parse("0.1").digit(0), DomainError);
}

TEST(DecimalStream, SourceIsPulledOncePerDigit) {
    int calls = 0;
    DecimalStream s(false, Natural(0), [&calls]() -> std::uint8_t { return static_cast<std::uint8_t>(++calls % 10); });
    EXPECT_EQ(s.digits(5), "12345");
    EXPECT_EQ(s.digits(5), "12345");
    DecimalStream copy = s;
    EXPECT_EQ(copy.digit(3), 3);
    EXPECT_EQ(calls, 5);
}

TEST(DecimalStream, RejectsNonDigitSource) {
    DecimalStream s(false, Natural(0), []() -> std::uint8_t { return 12; });
    EXPECT_THROW(s.digit(1), Error);
}

TEST(DecimalStream, ConcurrentReadersAgree) {
    auto s = sqrt_decimal(Natural(2));
    std::vector<std::string> seen(4);
    std::vector<std::thread> threads;
    for (int t = 0; t < 4; ++t) {
        threads.emplace_back([&, t] { seen[t] = s.digits(300); });
    }
    for (auto& th : threads) th.join();
    for (int t = 1; t < 4; ++t) EXPECT_EQ(seen[t], seen[0]);
}

TEST(DecimalJson, RoundTrip) {
    for (const char* text : {"0.4581", "-1.20", "-0.5", "12.0"}) {
        auto s = DecimalStream::parse(text);
        auto j = decimal_to_json(s, 4);
        auto back = decimal_from_json(j);
        EXPECT_TRUE(decimal_prefix_equal(s, back, 10)) << text;
        EXPECT_EQ(decimal_to_json(back, 4), j);
    }
    EXPECT_EQ(decimal_to_json(DecimalStream::parse("-0.5"), 2)["int"], "-0");
    EXPECT_THROW(decimal_from_json(nlohmann::json{{"int", 3}}), ParseError);
}
