#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "cantor/numbers.hpp"

namespace cantor {

/// The closed family of countable sets the built-in pairings move between.
enum class SetTag {
    nat,      // 1, 2, 3, ...
    nat0,     // 0, 1, 2, ...
    even,     // 2, 4, 6, ...
    odd,      // 1, 3, 5, ...
    integer,  // 0, 1, -1, 2, -2, ...
};

/// "nat", "nat0", "even", "odd", "int".
std::string_view to_string(SetTag tag);
/// Inverse of to_string; throws DomainError on anything else.
SetTag parse_set_tag(std::string_view text);

bool contains(SetTag tag, const Integer& x);

/// First `count` members in the tag's canonical order.
std::vector<Integer> enumerate(SetTag tag, std::size_t count);

/// 1-based position of x in the tag's canonical order. Throws DomainError if
/// x is not a member.
Natural canonical_index(SetTag tag, const Integer& x);

/// {x + offset : x in base}. Lets a shift pairing stay total on its domain.
struct Domain {
    SetTag base = SetTag::nat;
    Natural offset;

    Domain() = default;
    Domain(SetTag b) : base(b) {}
    Domain(SetTag b, Natural off) : base(b), offset(std::move(off)) {}

    std::string name() const;
    bool contains(const Integer& x) const;
    std::vector<Integer> enumerate(std::size_t count) const;

    friend bool operator==(const Domain&, const Domain&) = default;
};

// The elementary pairings. Each throws DomainError outside its domain.
Natural nat_to_even(const Natural& n);   // n -> 2n
Natural even_to_nat(const Natural& m);   // m -> m/2
Natural nat_to_nat0(const Natural& n);   // n -> n-1
Natural nat0_to_nat(const Natural& m);   // m -> m+1
Natural nat_to_odd(const Natural& n);    // n -> 2n-1
Natural odd_to_nat(const Natural& m);    // m -> (m+1)/2
/// Even n -> n/2, odd n -> -(n-1)/2. In particular 1 -> 0.
Integer nat_to_int(const Natural& n);
/// z > 0 -> 2z, z < 0 -> 2|z|+1, 0 -> 1.
Natural int_to_nat(const Integer& z);

/// A named pair of mutually inverse total maps between two domains.
class Bijection {
public:
    using Map = std::function<Integer(const Integer&)>;

    Bijection(std::string name, Domain domain, Domain codomain, Map forward, Map inverse);

    const std::string& name() const noexcept { return name_; }
    const Domain& domain() const noexcept { return domain_; }
    const Domain& codomain() const noexcept { return codomain_; }

    /// Throws DomainError if x is not in domain().
    Integer forward(const Integer& x) const;
    /// Throws DomainError if y is not in codomain().
    Integer inverse(const Integer& y) const;

    /// Same pairing read right to left.
    Bijection inverted() const;

private:
    std::string name_;
    Domain domain_;
    Domain codomain_;
    Map forward_;
    Map inverse_;
};

/// g after f. Requires f.codomain() == g.domain(), else CompositionError.
Bijection compose(const Bijection& f, const Bijection& g);

Bijection doubling();                       // "double": nat -> even
Bijection predecessor();                    // "pred":   nat -> nat0
Bijection shift_bijection(const Natural& k);  // "shift:<k>": {k+1, k+2, ...} -> nat
Bijection zigzag();                         // "zigzag": nat -> int
Bijection to_odd();                         // "to-odd": nat -> odd
Bijection identity(SetTag tag);

/// Resolves a CLI name: double, pred, shift:<k>, zigzag, to-odd.
Bijection bijection_by_name(std::string_view name);

/// The pairing nat -> tag whose forward map lists the tag's canonical order.
Bijection canonical_bijection(SetTag tag);

}  // namespace cantor
