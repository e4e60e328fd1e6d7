#include <gtest/gtest.h>

#include "cantor/numbers.hpp"

using namespace cantor;

TEST(Natural, RejectsNegative) {
    EXPECT_THROW(Natural(-1), DomainError);
    EXPECT_THROW(Natural(BigInt(-5)), DomainError);
    EXPECT_THROW(Natural(3) - Natural(4), DomainError);
}

TEST(Natural, ExactAtLargeMagnitude) {
    Natural big = pow10(40) + Natural(7);
    EXPECT_EQ(big.str(), "10000000000000000000000000000000000000007");
    EXPECT_EQ((big * big - big * big).str(), "0");
    EXPECT_EQ(big - pow10(40), Natural(7));
    EXPECT_THROW(big.to_u64(), DomainError);
}

TEST(Natural, Parse) {
    EXPECT_EQ(Natural::parse("0012"), Natural(12));
    EXPECT_THROW(Natural::parse(""), ParseError);
    EXPECT_THROW(Natural::parse("-3"), ParseError);
    try {
        Natural::parse("12x4");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 2u);
    }
}

TEST(Integer, SignAndMagnitude) {
    EXPECT_EQ(Integer(0).sign(), Sign::zero);
    EXPECT_EQ(Integer(-4).sign(), Sign::negative);
    EXPECT_EQ(Integer(-4).magnitude(), Natural(4));
    EXPECT_EQ(Integer::parse("-17"), Integer(-17));
    EXPECT_EQ(Integer::parse("+17"), Integer(17));
    EXPECT_THROW(Integer::parse("-"), ParseError);
}

TEST(Integer, DivmodTruncates) {
    auto [q, r] = divmod(Integer(-7), Integer(2));
    EXPECT_EQ(q, Integer(-3));
    EXPECT_EQ(r, Integer(-1));
    EXPECT_THROW(divmod(Integer(1), Integer(0)), DomainError);
}

TEST(Rational, CanonicalForm) {
    Rational r(Integer(14), Integer(10));
    EXPECT_EQ(r.numerator(), Integer(7));
    EXPECT_EQ(r.denominator(), Natural(5));

    Rational neg(Integer(6), Integer(-4));
    EXPECT_EQ(neg.str(), "-3/2");

    Rational zero(Integer(0), Integer(-9));
    EXPECT_EQ(zero.str(), "0/1");

    EXPECT_THROW(Rational(Integer(1), Integer(0)), DomainError);
}

TEST(Rational, ParseAndOrder) {
    EXPECT_EQ(Rational::parse("2/4"), Rational(Integer(1), Integer(2)));
    EXPECT_EQ(Rational::parse("-7"), Rational(-7));
    EXPECT_THROW(Rational::parse("1/0"), ParseError);
    EXPECT_THROW(Rational::parse("1/x"), ParseError);
    EXPECT_LT(Rational::parse("1/3"), Rational::parse("1/2"));
    EXPECT_LT(Rational::parse("-1/2"), Rational::parse("-1/3"));
    EXPECT_EQ(Rational::parse("1/3") + Rational::parse("1/6"), Rational::parse("1/2"));
    EXPECT_EQ(Rational::parse("1/3") - Rational::parse("1/2"), Rational::parse("-1/6"));
    EXPECT_EQ(Rational::parse("2/3") * Rational::parse("9/4"), Rational::parse("3/2"));
}
