#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

#include "cantor/numbers.hpp"

namespace cantor {

/// A pairing rule over the single variable n.
///
/// Grammar:
///   expr   := term (('+' | '-') term)*
///   term   := factor (('*' | '/') factor)*
///   factor := integer | 'n' | '-' factor | '(' expr ')'
///           | 'if' 'even' 'then' expr 'else' expr
///
/// '/' is exact division. The conditional tests the parity of n itself.
/// Nodes are immutable and shared between copies.
class RuleExpr {
public:
    enum class Kind { literal, variable, negate, add, subtract, multiply, divide, if_even };

    static RuleExpr literal(Natural value);
    static RuleExpr variable();
    static RuleExpr negate(RuleExpr operand);
    /// kind must be add, subtract, multiply or divide.
    static RuleExpr binary(Kind kind, RuleExpr lhs, RuleExpr rhs);
    static RuleExpr if_even(RuleExpr then_branch, RuleExpr else_branch);

    Kind kind() const;
    /// Literal value; DomainError for other kinds.
    const Natural& value() const;
    /// 0 for leaves, 1 for negate, 2 otherwise.
    std::size_t arity() const;
    /// Children left to right (then before else). DomainError out of range.
    const RuleExpr& operand(std::size_t i) const;

    /// Structural equality.
    friend bool operator==(const RuleExpr& a, const RuleExpr& b);

private:
    struct Node;
    explicit RuleExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

/// Throws ParseError with a 0-based offset on malformed input or any
/// identifier other than n and the keywords.
RuleExpr parse_rule(std::string_view text);

/// Exact evaluation. Throws EvalError on division by zero or a nonzero
/// remainder.
Integer eval_rule(const RuleExpr& rule, const Integer& n);

/// Infix rendering with only the parentheses the grammar needs;
/// parse_rule(to_string(r)) == r.
std::string to_string(const RuleExpr& rule);

/// Fully bracketed prefix form, e.g. "(* 2 n)". For tests and diagnostics.
std::string to_sexpr(const RuleExpr& rule);

}  // namespace cantor
