#include "cantor/bijection.hpp"

namespace cantor {

namespace {

void require_positive(const Natural& n, const char* what) {
    if (n.is_zero()) throw DomainError(std::string(what) + " is defined for n >= 1");
}

}  // namespace

std::string_view to_string(SetTag tag) {
    switch (tag) {
        case SetTag::nat: return "nat";
        case SetTag::nat0: return "nat0";
        case SetTag::even: return "even";
        case SetTag::odd: return "odd";
        case SetTag::integer: return "int";
    }
    return "?";
}

SetTag parse_set_tag(std::string_view text) {
    for (SetTag t : {SetTag::nat, SetTag::nat0, SetTag::even, SetTag::odd, SetTag::integer}) {
        if (text == to_string(t)) return t;
    }
    throw DomainError("unknown set '" + std::string(text) + "' (expected nat, nat0, even, odd or int)");
}

bool contains(SetTag tag, const Integer& x) {
    switch (tag) {
        case SetTag::nat: return x.sign() == Sign::positive;
        case SetTag::nat0: return x.sign() != Sign::negative;
        case SetTag::even: return x.sign() == Sign::positive && x.is_even();
        case SetTag::odd: return x.sign() == Sign::positive && !x.is_even();
        case SetTag::integer: return true;
    }
    return false;
}

std::vector<Integer> enumerate(SetTag tag, std::size_t count) {
    std::vector<Integer> out;
    out.reserve(count);
    Integer x;
    switch (tag) {
        case SetTag::nat:
            for (x = 1; out.size() < count; x += 1) out.push_back(x);
            break;
        case SetTag::nat0:
            for (x = 0; out.size() < count; x += 1) out.push_back(x);
            break;
        case SetTag::even:
            for (x = 2; out.size() < count; x += 2) out.push_back(x);
            break;
        case SetTag::odd:
            for (x = 1; out.size() < count; x += 2) out.push_back(x);
            break;
        case SetTag::integer:
            if (count > 0) out.push_back(Integer(0));
            for (x = 1; out.size() < count; x += 1) {
                out.push_back(x);
                if (out.size() < count) out.push_back(-x);
            }
            break;
    }
    return out;
}

Natural canonical_index(SetTag tag, const Integer& x) {
    return to_natural(canonical_bijection(tag).inverse(x));
}

std::string Domain::name() const {
    std::string n(to_string(base));
    if (!offset.is_zero()) n += "+" + offset.str();
    return n;
}

bool Domain::contains(const Integer& x) const {
    return cantor::contains(base, x - Integer(offset));
}

std::vector<Integer> Domain::enumerate(std::size_t count) const {
    auto values = cantor::enumerate(base, count);
    if (!offset.is_zero()) {
        for (auto& v : values) v += Integer(offset);
    }
    return values;
}

Natural nat_to_even(const Natural& n) {
    require_positive(n, "nat_to_even");
    return n * Natural(2);
}

Natural even_to_nat(const Natural& m) {
    if (m.is_zero() || !m.is_even()) throw DomainError(m.str() + " is not a positive even number");
    return m / Natural(2);
}

Natural nat_to_nat0(const Natural& n) {
    require_positive(n, "nat_to_nat0");
    return n - Natural(1);
}

Natural nat0_to_nat(const Natural& m) {
    return m + Natural(1);
}

Natural nat_to_odd(const Natural& n) {
    require_positive(n, "nat_to_odd");
    return n * Natural(2) - Natural(1);
}

Natural odd_to_nat(const Natural& m) {
    if (m.is_even()) throw DomainError(m.str() + " is not a positive odd number");
    return (m + Natural(1)) / Natural(2);
}

Integer nat_to_int(const Natural& n) {
    require_positive(n, "nat_to_int");
    if (n.is_even()) return Integer(n / Natural(2));
    return -Integer((n - Natural(1)) / Natural(2));
}

Natural int_to_nat(const Integer& z) {
    switch (z.sign()) {
        case Sign::zero: return Natural(1);
        case Sign::positive: return z.magnitude() * Natural(2);
        case Sign::negative: return z.magnitude() * Natural(2) + Natural(1);
    }
    return Natural(1);
}

Bijection::Bijection(std::string name, Domain domain, Domain codomain, Map forward, Map inverse)
    : name_(std::move(name)),
      domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      forward_(std::move(forward)),
      inverse_(std::move(inverse)) {}

Integer Bijection::forward(const Integer& x) const {
    if (!domain_.contains(x)) throw DomainError(x.str() + " is not in " + domain_.name() + " (domain of " + name_ + ")");
    return forward_(x);
}

Integer Bijection::inverse(const Integer& y) const {
    if (!codomain_.contains(y)) {
        throw DomainError(y.str() + " is not in " + codomain_.name() + " (codomain of " + name_ + ")");
    }
    return inverse_(y);
}

Bijection Bijection::inverted() const {
    return Bijection(name_ + "^-1", codomain_, domain_, inverse_, forward_);
}

Bijection compose(const Bijection& f, const Bijection& g) {
    if (!(f.codomain() == g.domain())) {
        throw CompositionError("cannot compose " + g.name() + " after " + f.name() + ": codomain " +
                               f.codomain().name() + " != domain " + g.domain().name());
    }
    return Bijection(
        g.name() + "." + f.name(), f.domain(), g.codomain(),
        [f, g](const Integer& x) { return g.forward(f.forward(x)); },
        [f, g](const Integer& y) { return f.inverse(g.inverse(y)); });
}

Bijection doubling() {
    return Bijection(
        "double", SetTag::nat, SetTag::even,
        [](const Integer& x) { return Integer(nat_to_even(to_natural(x))); },
        [](const Integer& y) { return Integer(even_to_nat(to_natural(y))); });
}

Bijection predecessor() {
    return Bijection(
        "pred", SetTag::nat, SetTag::nat0,
        [](const Integer& x) { return Integer(nat_to_nat0(to_natural(x))); },
        [](const Integer& y) { return Integer(nat0_to_nat(to_natural(y))); });
}

Bijection shift_bijection(const Natural& k) {
    Integer shift(k);
    return Bijection(
        "shift:" + k.str(), Domain(SetTag::nat, k), SetTag::nat,
        [shift](const Integer& x) { return x - shift; },
        [shift](const Integer& y) { return y + shift; });
}

Bijection zigzag() {
    return Bijection(
        "zigzag", SetTag::nat, SetTag::integer,
        [](const Integer& x) { return nat_to_int(to_natural(x)); },
        [](const Integer& y) { return Integer(int_to_nat(y)); });
}

Bijection to_odd() {
    return Bijection(
        "to-odd", SetTag::nat, SetTag::odd,
        [](const Integer& x) { return Integer(nat_to_odd(to_natural(x))); },
        [](const Integer& y) { return Integer(odd_to_nat(to_natural(y))); });
}

Bijection identity(SetTag tag) {
    auto same = [](const Integer& x) { return x; };
    return Bijection("id", tag, tag, same, same);
}

Bijection bijection_by_name(std::string_view name) {
    if (name == "double") return doubling();
    if (name == "pred") return predecessor();
    if (name == "zigzag") return zigzag();
    if (name == "to-odd") return to_odd();
    if (name.starts_with("shift:")) {
        auto arg = name.substr(6);
        try {
            return shift_bijection(Natural::parse(arg));
        } catch (const ParseError&) {
            throw DomainError("shift needs a nonnegative integer, got '" + std::string(arg) + "'");
        }
    }
    throw DomainError("unknown bijection '" + std::string(name) +
                      "' (expected double, pred, shift:<k>, zigzag or to-odd)");
}

Bijection canonical_bijection(SetTag tag) {
    switch (tag) {
        case SetTag::nat: return identity(SetTag::nat);
        case SetTag::nat0: return predecessor();
        case SetTag::even: return doubling();
        case SetTag::odd: return to_odd();
        case SetTag::integer: return zigzag();
    }
    throw DomainError("unknown set tag");
}

}  // namespace cantor
