#include "cantor/pairing.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

namespace cantor {

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::bijection_on_prefix: return "bijection-on-prefix";
        case Verdict::not_injective: return "not-injective";
        case Verdict::not_surjective_on_prefix: return "not-surjective-on-prefix";
        case Verdict::out_of_codomain: return "out-of-codomain";
    }
    return "?";
}

std::string_view to_string(CardinalityOrder order) {
    switch (order) {
        case CardinalityOrder::less: return "<";
        case CardinalityOrder::equal: return "=";
        case CardinalityOrder::greater: return ">";
    }
    return "?";
}

CheckReport check_pairing(const RuleExpr& rule, SetTag codomain, std::uint64_t bound) {
    if (bound == 0) throw DomainError("check_pairing needs bound >= 1");
    CheckReport report;
    report.bound = bound;
    report.codomain = codomain;
    report.window = bound / 2;

    // value -> first two inputs producing it
    std::map<Integer, std::pair<std::uint64_t, std::uint64_t>> seen;
    for (std::uint64_t n = 1; n <= bound; ++n) {
        Integer value;
        try {
            value = eval_rule(rule, Integer(n));
        } catch (const EvalError& e) {
            if (report.out_of_codomain.size() < CheckReport::kMaxCounterexamples) {
                report.out_of_codomain.push_back({Natural(n), std::nullopt, e.what()});
            }
            ++report.out_of_codomain_count;
            continue;
        }
        if (!contains(codomain, value)) {
            if (report.out_of_codomain.size() < CheckReport::kMaxCounterexamples) {
                report.out_of_codomain.push_back(
                    {Natural(n), value, value.str() + " is not in " + std::string(to_string(codomain))});
            }
            ++report.out_of_codomain_count;
        }
        auto [it, inserted] = seen.try_emplace(value, n, 0);
        if (!inserted) {
            ++report.collision_count;
            if (it->second.second == 0) it->second.second = n;
        }
    }

    // The lexicographically smallest pairs are (first, second occurrence) of
    // some value, ordered by first occurrence.
    std::vector<Collision> collisions;
    for (const auto& [value, inputs] : seen) {
        if (inputs.second != 0) collisions.push_back({Natural(inputs.first), Natural(inputs.second), value});
    }
    std::sort(collisions.begin(), collisions.end(),
              [](const Collision& x, const Collision& y) { return x.first < y.first; });
    if (collisions.size() > CheckReport::kMaxCounterexamples) collisions.resize(CheckReport::kMaxCounterexamples);
    report.collisions = std::move(collisions);

    for (const Integer& target : enumerate(codomain, report.window)) {
        if (seen.contains(target)) continue;
        if (report.missed.size() < CheckReport::kMaxCounterexamples) report.missed.push_back(target);
        ++report.missed_count;
    }

    if (report.out_of_codomain_count > 0) {
        report.verdict = Verdict::out_of_codomain;
    } else if (report.collision_count > 0) {
        report.verdict = Verdict::not_injective;
    } else if (report.missed_count > 0) {
        report.verdict = Verdict::not_surjective_on_prefix;
    }
    return report;
}

namespace {

void validate_finite(const std::vector<std::string>& atoms, const char* label) {
    if (atoms.size() > kMaxFiniteSetSize) {
        throw DomainError(std::string("set ") + label + " has " + std::to_string(atoms.size()) +
                          " elements; exhaustive pairing is limited to " + std::to_string(kMaxFiniteSetSize) +
                          " (9! = 362880 pairings). Compare larger sets by counting their elements.");
    }
    std::set<std::string> unique(atoms.begin(), atoms.end());
    if (unique.size() != atoms.size()) throw DomainError(std::string("set ") + label + " lists an element twice");
}

struct InjectionWalker {
    const std::vector<std::string>& small;
    const std::vector<std::string>& large;
    bool small_is_a;
    const std::function<void(const FinitePairing&)>& visit;
    std::vector<std::size_t> image;
    std::vector<bool> used;
    std::uint64_t count = 0;

    void run(std::size_t i) {
        if (i == small.size()) {
            emit();
            return;
        }
        for (std::size_t j = 0; j < large.size(); ++j) {
            if (used[j]) continue;
            used[j] = true;
            image[i] = j;
            run(i + 1);
            used[j] = false;
        }
    }

    void emit() {
        ++count;
        FinitePairing p;
        for (std::size_t i = 0; i < small.size(); ++i) {
            if (small_is_a) p.pairs.emplace_back(small[i], large[image[i]]);
            else p.pairs.emplace_back(large[image[i]], small[i]);
        }
        auto& leftover = small_is_a ? p.leftover_b : p.leftover_a;
        for (std::size_t j = 0; j < large.size(); ++j) {
            if (!used[j]) leftover.push_back(large[j]);
        }
        visit(p);
    }
};

}  // namespace

std::uint64_t for_each_maximal_pairing(const std::vector<std::string>& a, const std::vector<std::string>& b,
                                       const std::function<void(const FinitePairing&)>& visit) {
    validate_finite(a, "A");
    validate_finite(b, "B");
    bool small_is_a = a.size() <= b.size();
    const auto& small = small_is_a ? a : b;
    const auto& large = small_is_a ? b : a;
    InjectionWalker walker{small, large, small_is_a, visit, std::vector<std::size_t>(small.size()),
                           std::vector<bool>(large.size(), false)};
    walker.run(0);
    return walker.count;
}

FiniteComparison compare_finite(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    FiniteComparison result;
    result.size_a = a.size();
    result.size_b = b.size();
    result.min_leftover = std::numeric_limits<std::size_t>::max();
    bool always_a = true;
    bool always_b = true;
    bool first = true;

    result.pairings = for_each_maximal_pairing(a, b, [&](const FinitePairing& p) {
        std::size_t leftover = p.leftover_a.size() + p.leftover_b.size();
        result.min_leftover = std::min(result.min_leftover, leftover);
        result.max_leftover = std::max(result.max_leftover, leftover);
        if (leftover == 0) result.any_without_remainder = true;
        if (p.leftover_a.empty()) always_a = false;
        if (p.leftover_b.empty()) always_b = false;
        if (first) {
            result.example = p;
            first = false;
        }
    });

    if (result.any_without_remainder) {
        result.verdict = CardinalityOrder::equal;
    } else if (always_b) {
        result.leftover_side = Side::b;
        result.verdict = CardinalityOrder::less;
    } else if (always_a) {
        result.leftover_side = Side::a;
        result.verdict = CardinalityOrder::greater;
    }
    return result;
}

}  // namespace cantor
