#pragma once

#include <cstddef>
#include <vector>

#include "cantor/numbers.hpp"

namespace cantor {

/// A cell of the fraction grid: row is the numerator, col the denominator.
struct GridPosition {
    Natural row;
    Natural col;

    /// row + col - 1
    Natural diagonal() const { return row + col - Natural(1); }

    friend bool operator==(const GridPosition&, const GridPosition&) = default;
};

/// Walks the p/q grid diagonal by diagonal in zigzag order:
///   diagonal 1: 1/1
///   even diagonals d: 1/d, 2/(d-1), ..., d/1   (numerator rising)
///   odd diagonals d >= 3: d/1, ..., 1/d        (numerator falling)
/// which gives 1/1, 1/2, 2/1, 3/1, 2/2, 1/3, 1/4, 2/3, 3/2, 4/1, 5/1, ...
class GridWalker {
public:
    GridWalker();

    const GridPosition& current() const noexcept { return current_; }
    void advance();

private:
    GridPosition current_;
};

/// First `count` cells in zigzag order, duplicates such as 2/2 included.
std::vector<GridPosition> traverse_grid(std::size_t count);

/// The n-th positive rational (n >= 1): the zigzag with every non-lowest-terms
/// cell skipped.
Rational nat_to_positive_rational(const Natural& n);

/// Inverse of nat_to_positive_rational. Throws DomainError unless r > 0.
Natural positive_rational_to_nat(const Rational& r);

/// N -> Q: 1 -> 0, even n -> +q(n/2), odd n >= 3 -> -q((n-1)/2), where q is
/// nat_to_positive_rational.
Rational nat_to_rational(const Natural& n);

/// Inverse of nat_to_rational.
Natural rational_to_nat(const Rational& r);

/// First `count` positive rationals in enumeration order.
std::vector<Rational> list_positive_rationals(std::size_t count);

/// Number of lowest-terms cells on diagonal d, which is phi(d + 1).
Natural canonical_cells_on_diagonal(const Natural& d);

}  // namespace cantor
