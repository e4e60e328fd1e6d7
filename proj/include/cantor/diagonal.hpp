#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cantor/decimal.hpp"

namespace cantor {

/// A digit substitution with no fixed point: rule(d) != d for every digit.
class DiagonalRule {
public:
    /// Throws DomainError if some entry is not a digit or maps a digit to itself.
    DiagonalRule(std::string name, std::array<std::uint8_t, 10> table);

    const std::string& name() const noexcept { return name_; }
    std::uint8_t operator()(std::uint8_t digit) const { return table_.at(digit); }

private:
    std::string name_;
    std::array<std::uint8_t, 10> table_;
};

/// d -> d+1, and 9 -> 0.
///
/// The witness it builds differs from every entry as a digit string, but not
/// necessarily as a real number: a witness ending in 000... or 999... may
/// equal an entry written the other way (0.5000... vs 0.4999...).
DiagonalRule paper_rule();

/// d -> 5 for d != 5, and 5 -> 4. The witness only has digits 4 and 5, so it
/// has a single decimal representation and differs in value from every entry.
DiagonalRule safe_rule();

/// "paper" or "safe"; DomainError otherwise.
DiagonalRule rule_by_name(std::string_view name);

/// A list of reals indexed from 1: either a finite list or an unbounded
/// generator. Generators are called once per requested index and may be
/// stateful, so a lazy enumeration is single-consumer.
class EnumerationOfReals {
public:
    using Generator = std::function<DecimalStream(std::size_t index)>;

    explicit EnumerationOfReals(std::vector<DecimalStream> entries);
    explicit EnumerationOfReals(Generator generator);

    /// Number of entries, or nullopt when unbounded.
    std::optional<std::size_t> size() const;
    bool has_entry(std::size_t index) const;

    /// Throws DomainError for index 0 or past the end of a finite list.
    DecimalStream entry(std::size_t index) const;

private:
    std::vector<DecimalStream> entries_;
    Generator generator_;
};

/// Integer part 0; fractional digit k is rule(digit k of entry k). Past the
/// end of a finite list the digits are 0. Digits are computed on demand.
/// Throws DomainError for an empty finite list.
DecimalStream diagonal_witness(const EnumerationOfReals& enumeration, const DiagonalRule& rule);

struct DiagonalCheck {
    std::size_t index = 0;  // entry k, compared at fractional position k
    std::uint8_t entry_digit = 0;
    std::uint8_t witness_digit = 0;
    bool differs = false;
};

struct WitnessReport {
    std::size_t requested = 0;
    std::vector<DiagonalCheck> checks;  // one per checked entry, in order
    bool truncated = false;             // the list ended before `requested`
    bool all_differ = false;
    std::optional<std::size_t> first_failure;
};

/// Compares digit k of the witness with digit k of entry k for k = 1..upto.
/// Finite lists shorter than `upto` are checked as far as they go and the
/// report is marked truncated. Throws DomainError if upto is 0.
WitnessReport verify_witness(const EnumerationOfReals& enumeration, const DecimalStream& witness, std::size_t upto);

}  // namespace cantor
