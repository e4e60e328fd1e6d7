#include <gtest/gtest.h>

#include <random>

#include "cantor/bijection.hpp"
#include "cantor/rule.hpp"

using namespace cantor;

namespace {

const char* kZigzag = "if even then n/2 else -(n-1)/2";

RuleExpr random_rule(std::mt19937& rng, int depth) {
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 7);
    std::uniform_int_distribution<int> lit(0, 20);
    using K = RuleExpr::Kind;
    switch (pick(rng)) {
        case 0: return RuleExpr::literal(Natural(lit(rng)));
        case 1: return RuleExpr::variable();
        case 2: return RuleExpr::negate(random_rule(rng, depth - 1));
        case 3: return RuleExpr::binary(K::add, random_rule(rng, depth - 1), random_rule(rng, depth - 1));
        case 4: return RuleExpr::binary(K::subtract, random_rule(rng, depth - 1), random_rule(rng, depth - 1));
        case 5: return RuleExpr::binary(K::multiply, random_rule(rng, depth - 1), random_rule(rng, depth - 1));
        case 6: return RuleExpr::binary(K::divide, random_rule(rng, depth - 1), random_rule(rng, depth - 1));
        default: return RuleExpr::if_even(random_rule(rng, depth - 1), random_rule(rng, depth - 1));
    }
}

std::size_t error_position(const std::string& text) {
    try {
        parse_rule(text);
    } catch (const ParseError& e) {
        return e.position();
    }
    ADD_FAILURE() << "no parse error for " << text;
    return std::string::npos;
}

}  // namespace

TEST(ParseRule, Doubling) {
    auto r = parse_rule("2*n");
    EXPECT_EQ(r, RuleExpr::binary(RuleExpr::Kind::multiply, RuleExpr::literal(Natural(2)), RuleExpr::variable()));
    EXPECT_EQ(to_sexpr(r), "(* 2 n)");
}

TEST(ParseRule, Zigzag) {
    auto r = parse_rule(kZigzag);
    EXPECT_EQ(r.kind(), RuleExpr::Kind::if_even);
    EXPECT_EQ(to_sexpr(r), "(if-even (/ n 2) (/ (neg (- n 1)) 2))");
}

TEST(ParseRule, PrecedenceAndAssociativity) {
    EXPECT_EQ(to_sexpr(parse_rule("1 + 2 * n")), "(+ 1 (* 2 n))");
    EXPECT_EQ(to_sexpr(parse_rule("n - 1 - 2")), "(- (- n 1) 2)");
    EXPECT_EQ(to_sexpr(parse_rule("n / 2 / 3")), "(/ (/ n 2) 3)");
    EXPECT_EQ(to_sexpr(parse_rule("-n * 2")), "(* (neg n) 2)");
    EXPECT_EQ(to_sexpr(parse_rule("(1 + n) * 2")), "(* (+ 1 n) 2)");
    EXPECT_EQ(to_sexpr(parse_rule("if even then 1 else 2 + 3")), "(if-even 1 (+ 2 3))");
}

TEST(ParseRule, Errors) {
    EXPECT_EQ(error_position("2**n"), 2u);
    EXPECT_EQ(error_position(""), 0u);
    EXPECT_EQ(error_position("2 n"), 2u);
    EXPECT_EQ(error_position("(n + 1"), 6u);
    EXPECT_EQ(error_position("m + 1"), 0u);
    EXPECT_EQ(error_position("n + x"), 4u);
    EXPECT_EQ(error_position("if odd then n else 1"), 3u);
    EXPECT_EQ(error_position("if even then n"), 14u);
    EXPECT_EQ(error_position("n ^ 2"), 2u);
}

TEST(EvalRule, Examples) {
    EXPECT_EQ(eval_rule(parse_rule(kZigzag), Integer(9)), Integer(-4));
    EXPECT_EQ(eval_rule(parse_rule("2*n"), Integer(0)), Integer(0));
    EXPECT_THROW(eval_rule(parse_rule("n/2"), Integer(3)), EvalError);
    EXPECT_THROW(eval_rule(parse_rule("1/(n-n)"), Integer(3)), EvalError);
    EXPECT_EQ(eval_rule(parse_rule("-n/2"), Integer(-8)), Integer(4));
}

TEST(EvalRule, ExactAtLargeMagnitude) {
    Integer big(pow10(30));
    EXPECT_EQ(eval_rule(parse_rule("n*n + 1"), big), Integer(pow10(60) + Natural(1)));
}

TEST(EvalRule, ZigzagMatchesBijection) {
    auto rule = parse_rule(kZigzag);
    for (int n = 1; n <= 10000; ++n) ASSERT_EQ(eval_rule(rule, Integer(n)), nat_to_int(Natural(n))) << n;
}

TEST(PrettyPrint, RoundTripsRandomRules) {
    std::mt19937 rng(1234);
    for (int i = 0; i < 1000; ++i) {
        RuleExpr r = random_rule(rng, 5);
        std::string text = to_string(r);
        RuleExpr back = parse_rule(text);
        ASSERT_EQ(back, r) << text << "\n" << to_sexpr(r) << "\n" << to_sexpr(back);
    }
}

TEST(PrettyPrint, MinimalParentheses) {
    EXPECT_EQ(to_string(parse_rule("(2*n)")), "2*n");
    EXPECT_EQ(to_string(parse_rule(kZigzag)), "if even then n/2 else -(n - 1)/2");
    EXPECT_EQ(to_string(parse_rule("(if even then 1 else 2) + 3")), "(if even then 1 else 2) + 3");
    EXPECT_EQ(to_string(parse_rule("n - (1 - n)")), "n - (1 - n)");
}

TEST(RuleExpr, Accessors) {
    auto r = parse_rule("n + 4");
    EXPECT_EQ(r.arity(), 2u);
    EXPECT_EQ(r.operand(1).value(), Natural(4));
    EXPECT_THROW(r.value(), DomainError);
    EXPECT_THROW(r.operand(2), DomainError);
    EXPECT_THROW(RuleExpr::binary(RuleExpr::Kind::negate, r, r), DomainError);
}
