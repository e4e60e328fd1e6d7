#include "cantor/diagonal.hpp"

namespace cantor {

DiagonalRule::DiagonalRule(std::string name, std::array<std::uint8_t, 10> table)
    : name_(std::move(name)), table_(table) {
    for (std::uint8_t d = 0; d < 10; ++d) {
        if (table_[d] > 9) throw DomainError("rule " + name_ + " maps " + std::to_string(d) + " to a non-digit");
        if (table_[d] == d) throw DomainError("rule " + name_ + " has fixed point " + std::to_string(d));
    }
}

DiagonalRule paper_rule() {
    return DiagonalRule("paper", {1, 2, 3, 4, 5, 6, 7, 8, 9, 0});
}

DiagonalRule safe_rule() {
    return DiagonalRule("safe", {5, 5, 5, 5, 5, 4, 5, 5, 5, 5});
}

DiagonalRule rule_by_name(std::string_view name) {
    if (name == "paper") return paper_rule();
    if (name == "safe") return safe_rule();
    throw DomainError("unknown diagonal rule '" + std::string(name) + "' (expected paper or safe)");
}

EnumerationOfReals::EnumerationOfReals(std::vector<DecimalStream> entries) : entries_(std::move(entries)) {}

EnumerationOfReals::EnumerationOfReals(Generator generator) : generator_(std::move(generator)) {
    if (!generator_) throw DomainError("empty generator");
}

std::optional<std::size_t> EnumerationOfReals::size() const {
    if (generator_) return std::nullopt;
    return entries_.size();
}

bool EnumerationOfReals::has_entry(std::size_t index) const {
    if (index == 0) return false;
    return generator_ || index <= entries_.size();
}

DecimalStream EnumerationOfReals::entry(std::size_t index) const {
    if (index == 0) throw DomainError("enumeration indices start at 1");
    if (generator_) return generator_(index);
    if (index > entries_.size()) {
        throw DomainError("entry " + std::to_string(index) + " requested from a list of " +
                          std::to_string(entries_.size()));
    }
    return entries_[index - 1];
}

DecimalStream diagonal_witness(const EnumerationOfReals& enumeration, const DiagonalRule& rule) {
    if (enumeration.size() == std::size_t{0}) throw DomainError("cannot diagonalize an empty list");
    std::size_t position = 0;
    return DecimalStream(false, Natural(0), [enumeration, rule, position]() mutable -> std::uint8_t {
        ++position;
        if (!enumeration.has_entry(position)) return 0;
        return rule(enumeration.entry(position).digit(position));
    });
}

WitnessReport verify_witness(const EnumerationOfReals& enumeration, const DecimalStream& witness, std::size_t upto) {
    if (upto == 0) throw DomainError("verify_witness needs upto >= 1");
    WitnessReport report;
    report.requested = upto;
    for (std::size_t k = 1; k <= upto; ++k) {
        if (!enumeration.has_entry(k)) {
            report.truncated = true;
            break;
        }
        DiagonalCheck check;
        check.index = k;
        check.entry_digit = enumeration.entry(k).digit(k);
        check.witness_digit = witness.digit(k);
        check.differs = check.entry_digit != check.witness_digit;
        if (!check.differs && !report.first_failure) report.first_failure = k;
        report.checks.push_back(check);
    }
    report.all_differ = !report.first_failure.has_value();
    return report;
}

}  // namespace cantor
