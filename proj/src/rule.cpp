#include "cantor/rule.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace cantor {

struct RuleExpr::Node {
    Kind kind;
    Natural value;
    std::vector<RuleExpr> operands;
};

RuleExpr RuleExpr::literal(Natural value) {
    return RuleExpr(std::make_shared<const Node>(Node{Kind::literal, std::move(value), {}}));
}

RuleExpr RuleExpr::variable() {
    return RuleExpr(std::make_shared<const Node>(Node{Kind::variable, Natural(0), {}}));
}

RuleExpr RuleExpr::negate(RuleExpr operand) {
    return RuleExpr(std::make_shared<const Node>(Node{Kind::negate, Natural(0), {std::move(operand)}}));
}

RuleExpr RuleExpr::binary(Kind kind, RuleExpr lhs, RuleExpr rhs) {
    if (kind != Kind::add && kind != Kind::subtract && kind != Kind::multiply && kind != Kind::divide) {
        throw DomainError("not a binary operator kind");
    }
    return RuleExpr(std::make_shared<const Node>(Node{kind, Natural(0), {std::move(lhs), std::move(rhs)}}));
}

RuleExpr RuleExpr::if_even(RuleExpr then_branch, RuleExpr else_branch) {
    return RuleExpr(std::make_shared<const Node>(
        Node{Kind::if_even, Natural(0), {std::move(then_branch), std::move(else_branch)}}));
}

RuleExpr::Kind RuleExpr::kind() const { return node_->kind; }

const Natural& RuleExpr::value() const {
    if (node_->kind != Kind::literal) throw DomainError("not a literal");
    return node_->value;
}

std::size_t RuleExpr::arity() const { return node_->operands.size(); }

const RuleExpr& RuleExpr::operand(std::size_t i) const {
    if (i >= node_->operands.size()) throw DomainError("operand index out of range");
    return node_->operands[i];
}

bool operator==(const RuleExpr& a, const RuleExpr& b) {
    if (a.node_ == b.node_) return true;
    if (a.node_->kind != b.node_->kind || a.node_->value != b.node_->value) return false;
    return a.node_->operands == b.node_->operands;
}

namespace {

enum class Tok { number, var, kw_if, kw_even, kw_then, kw_else, plus, minus, star, slash, lparen, rparen, end };

struct Token {
    Tok type;
    std::size_t pos;
    std::string text;
};

std::string describe(const Token& t) {
    return t.type == Tok::end ? std::string("end of input") : "'" + t.text + "'";
}

std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < src.size()) {
        unsigned char c = static_cast<unsigned char>(src[i]);
        if (std::isspace(c)) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (std::isdigit(c)) {
            while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
            out.push_back({Tok::number, start, std::string(src.substr(start, i - start))});
            continue;
        }
        if (std::isalpha(c) || c == '_') {
            while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) ++i;
            std::string word(src.substr(start, i - start));
            Tok type;
            if (word == "n") type = Tok::var;
            else if (word == "if") type = Tok::kw_if;
            else if (word == "even") type = Tok::kw_even;
            else if (word == "then") type = Tok::kw_then;
            else if (word == "else") type = Tok::kw_else;
            else throw ParseError("unknown variable '" + word + "' (rules use the single variable n)", start);
            out.push_back({type, start, std::move(word)});
            continue;
        }
        Tok type;
        switch (c) {
            case '+': type = Tok::plus; break;
            case '-': type = Tok::minus; break;
            case '*': type = Tok::star; break;
            case '/': type = Tok::slash; break;
            case '(': type = Tok::lparen; break;
            case ')': type = Tok::rparen; break;
            default: throw ParseError(std::string("unexpected character '") + src[i] + "'", start);
        }
        out.push_back({type, start, std::string(1, src[i])});
        ++i;
    }
    out.push_back({Tok::end, src.size(), ""});
    return out;
}

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    RuleExpr parse() {
        RuleExpr e = expr();
        if (peek().type != Tok::end) throw ParseError("unexpected " + describe(peek()), peek().pos);
        return e;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& take() { return tokens_[pos_++]; }

    void expect(Tok type, const char* what) {
        if (peek().type != type) throw ParseError(std::string("expected ") + what + ", found " + describe(peek()), peek().pos);
        ++pos_;
    }

    RuleExpr expr() {
        RuleExpr lhs = term();
        while (peek().type == Tok::plus || peek().type == Tok::minus) {
            auto kind = take().type == Tok::plus ? RuleExpr::Kind::add : RuleExpr::Kind::subtract;
            lhs = RuleExpr::binary(kind, std::move(lhs), term());
        }
        return lhs;
    }

    RuleExpr term() {
        RuleExpr lhs = factor();
        while (peek().type == Tok::star || peek().type == Tok::slash) {
            auto kind = take().type == Tok::star ? RuleExpr::Kind::multiply : RuleExpr::Kind::divide;
            lhs = RuleExpr::binary(kind, std::move(lhs), factor());
        }
        return lhs;
    }

    RuleExpr factor() {
        const Token& t = peek();
        switch (t.type) {
            case Tok::number:
                ++pos_;
                return RuleExpr::literal(Natural::parse(t.text));
            case Tok::var:
                ++pos_;
                return RuleExpr::variable();
            case Tok::minus:
                ++pos_;
                return RuleExpr::negate(factor());
            case Tok::lparen: {
                ++pos_;
                RuleExpr inner = expr();
                expect(Tok::rparen, "')'");
                return inner;
            }
            case Tok::kw_if: {
                ++pos_;
                expect(Tok::kw_even, "'even'");
                expect(Tok::kw_then, "'then'");
                RuleExpr then_branch = expr();
                expect(Tok::kw_else, "'else'");
                RuleExpr else_branch = expr();
                return RuleExpr::if_even(std::move(then_branch), std::move(else_branch));
            }
            default:
                throw ParseError("expected a number, 'n', '-', '(' or 'if', found " + describe(t), t.pos);
        }
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

// Precedence contexts for printing: 0 = anywhere an expr may stand alone,
// 1 = operand of + or -, 2 = operand of * or / (or right side of + -),
// 3 = operand of unary minus (or right side of * /).
void print(const RuleExpr& e, int context, std::string& out) {
    using K = RuleExpr::Kind;
    switch (e.kind()) {
        case K::literal: out += e.value().str(); return;
        case K::variable: out += 'n'; return;
        case K::negate:
            out += '-';
            print(e.operand(0), 3, out);
            return;
        case K::add:
        case K::subtract: {
            bool parens = context >= 2;
            if (parens) out += '(';
            print(e.operand(0), 1, out);
            out += e.kind() == K::add ? " + " : " - ";
            print(e.operand(1), 2, out);
            if (parens) out += ')';
            return;
        }
        case K::multiply:
        case K::divide: {
            bool parens = context >= 3;
            if (parens) out += '(';
            print(e.operand(0), 2, out);
            out += e.kind() == K::multiply ? "*" : "/";
            print(e.operand(1), 3, out);
            if (parens) out += ')';
            return;
        }
        case K::if_even: {
            // The else branch runs to the end of the enclosing expr, so a
            // conditional nested inside an operator must be bracketed.
            bool parens = context > 0;
            if (parens) out += '(';
            out += "if even then ";
            print(e.operand(0), 0, out);
            out += " else ";
            print(e.operand(1), 0, out);
            if (parens) out += ')';
            return;
        }
    }
}

}  // namespace

RuleExpr parse_rule(std::string_view text) {
    return Parser(tokenize(text)).parse();
}

Integer eval_rule(const RuleExpr& rule, const Integer& n) {
    using K = RuleExpr::Kind;
    switch (rule.kind()) {
        case K::literal: return Integer(rule.value());
        case K::variable: return n;
        case K::negate: return -eval_rule(rule.operand(0), n);
        case K::add: return eval_rule(rule.operand(0), n) + eval_rule(rule.operand(1), n);
        case K::subtract: return eval_rule(rule.operand(0), n) - eval_rule(rule.operand(1), n);
        case K::multiply: return eval_rule(rule.operand(0), n) * eval_rule(rule.operand(1), n);
        case K::divide: {
            Integer a = eval_rule(rule.operand(0), n);
            Integer b = eval_rule(rule.operand(1), n);
            if (b.is_zero()) throw EvalError("division by zero at n=" + n.str());
            auto [q, r] = divmod(a, b);
            if (!r.is_zero()) throw EvalError("inexact division " + a.str() + "/" + b.str() + " at n=" + n.str());
            return q;
        }
        case K::if_even: return eval_rule(rule.operand(n.is_even() ? 0 : 1), n);
    }
    throw EvalError("unknown node");
}

std::string to_string(const RuleExpr& rule) {
    std::string out;
    print(rule, 0, out);
    return out;
}

std::string to_sexpr(const RuleExpr& rule) {
    using K = RuleExpr::Kind;
    switch (rule.kind()) {
        case K::literal: return rule.value().str();
        case K::variable: return "n";
        case K::negate: return "(neg " + to_sexpr(rule.operand(0)) + ")";
        case K::add: return "(+ " + to_sexpr(rule.operand(0)) + " " + to_sexpr(rule.operand(1)) + ")";
        case K::subtract: return "(- " + to_sexpr(rule.operand(0)) + " " + to_sexpr(rule.operand(1)) + ")";
        case K::multiply: return "(* " + to_sexpr(rule.operand(0)) + " " + to_sexpr(rule.operand(1)) + ")";
        case K::divide: return "(/ " + to_sexpr(rule.operand(0)) + " " + to_sexpr(rule.operand(1)) + ")";
        case K::if_even: return "(if-even " + to_sexpr(rule.operand(0)) + " " + to_sexpr(rule.operand(1)) + ")";
    }
    return "?";
}

}  // namespace cantor
