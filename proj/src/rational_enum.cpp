#include "cantor/rational_enum.hpp"

#include <cstdint>
#include <numeric>

namespace cantor {

namespace {

using u64 = std::uint64_t;

// Searches walk the grid one diagonal at a time; keep diagonals small enough
// that the running index cannot overflow 64 bits.
constexpr u64 kMaxDiagonal = u64{1} << 31;

u64 totient(u64 s) {
    u64 result = s;
    for (u64 f = 2; f * f <= s; ++f) {
        if (s % f == 0) {
            while (s % f == 0) s /= f;
            result -= result / f;
        }
    }
    if (s > 1) result -= result / s;
    return result;
}

// Cell i (1-based) of diagonal d in zigzag order, as (row, col).
std::pair<u64, u64> cell_on_diagonal(u64 d, u64 i) {
    if (d % 2 == 0) return {i, d + 1 - i};
    return {d + 1 - i, i};
}

// Position of (row, col) within its diagonal.
u64 position_on_diagonal(u64 row, u64 col) {
    u64 d = row + col - 1;
    return d % 2 == 0 ? row : d + 1 - row;
}

u64 index_as_u64(const Natural& n, const char* what) {
    if (n.is_zero()) throw DomainError(std::string(what) + " is defined for n >= 1");
    return n.to_u64();
}

}  // namespace

GridWalker::GridWalker() : current_{Natural(1), Natural(1)} {}

void GridWalker::advance() {
    Natural d = current_.diagonal();
    const Natural one(1);
    if (d.is_even()) {
        if (current_.col > one) {
            current_.row += one;
            current_.col = current_.col - one;
        } else {
            current_ = {d + one, one};
        }
    } else {
        if (current_.row > one) {
            current_.row = current_.row - one;
            current_.col += one;
        } else {
            current_ = {one, d + one};
        }
    }
}

std::vector<GridPosition> traverse_grid(std::size_t count) {
    std::vector<GridPosition> out;
    out.reserve(count);
    GridWalker walker;
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(walker.current());
        walker.advance();
    }
    return out;
}

Natural canonical_cells_on_diagonal(const Natural& d) {
    if (d.is_zero()) throw DomainError("diagonals are numbered from 1");
    return Natural(totient(d.to_u64() + 1));
}

Rational nat_to_positive_rational(const Natural& n) {
    u64 remaining = index_as_u64(n, "nat_to_positive_rational");
    u64 d = 1;
    // Whole diagonals are skipped by their count of lowest-terms cells.
    for (u64 cells = totient(d + 1); remaining > cells; cells = totient(d + 1)) {
        remaining -= cells;
        ++d;
    }
    for (u64 i = 1; i <= d; ++i) {
        auto [row, col] = cell_on_diagonal(d, i);
        if (std::gcd(row, col) != 1) continue;
        if (--remaining == 0) return Rational(Integer(row), Integer(col));
    }
    throw Error("diagonal count mismatch");  // unreachable: phi(d+1) >= remaining
}

Natural positive_rational_to_nat(const Rational& r) {
    if (r.sign() != Sign::positive) throw DomainError("expected a positive rational, got " + r.str());
    Natural p = r.numerator().magnitude();
    const Natural& q = r.denominator();
    if (p + q > Natural(kMaxDiagonal)) throw DomainError(r.str() + " lies too far out in the grid to search");
    u64 row = p.to_u64();
    u64 col = q.to_u64();
    u64 d = row + col - 1;

    u64 index = 0;
    for (u64 e = 1; e < d; ++e) index += totient(e + 1);
    u64 target = position_on_diagonal(row, col);
    for (u64 i = 1; i <= target; ++i) {
        auto [rr, cc] = cell_on_diagonal(d, i);
        if (std::gcd(rr, cc) == 1) ++index;
    }
    return Natural(index);
}

Rational nat_to_rational(const Natural& n) {
    if (n.is_zero()) throw DomainError("nat_to_rational is defined for n >= 1");
    const Natural one(1);
    if (n == one) return Rational(0);
    if (n.is_even()) return nat_to_positive_rational(n / Natural(2));
    return -nat_to_positive_rational((n - one) / Natural(2));
}

Natural rational_to_nat(const Rational& r) {
    switch (r.sign()) {
        case Sign::zero: return Natural(1);
        case Sign::positive: return positive_rational_to_nat(r) * Natural(2);
        case Sign::negative: return positive_rational_to_nat(-r) * Natural(2) + Natural(1);
    }
    return Natural(1);
}

std::vector<Rational> list_positive_rationals(std::size_t count) {
    std::vector<Rational> out;
    out.reserve(count);
    GridWalker walker;
    while (out.size() < count) {
        const auto& cell = walker.current();
        if (gcd(cell.row, cell.col) == Natural(1)) out.emplace_back(Integer(cell.row), Integer(cell.col));
        walker.advance();
    }
    return out;
}

}  // namespace cantor
