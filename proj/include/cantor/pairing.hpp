#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cantor/bijection.hpp"
#include "cantor/rule.hpp"

namespace cantor {

enum class Verdict { bijection_on_prefix, not_injective, not_surjective_on_prefix, out_of_codomain };

/// "bijection-on-prefix", "not-injective", "not-surjective-on-prefix", "out-of-codomain".
std::string_view to_string(Verdict v);

struct OutOfCodomain {
    Natural input;
    std::optional<Integer> output;  // empty when evaluation failed
    std::string reason;
};

struct Collision {
    Natural first;
    Natural second;
    Integer value;
};

/// Outcome of checking a rule as a pairing N -> codomain on n = 1..bound.
/// Counterexample lists hold at most kMaxCounterexamples entries, smallest
/// first; the *_count fields hold the full totals.
struct CheckReport {
    static constexpr std::size_t kMaxCounterexamples = 10;

    Verdict verdict = Verdict::bijection_on_prefix;
    std::uint64_t bound = 0;
    SetTag codomain = SetTag::nat;
    /// Codomain members at canonical positions 1..window must all be hit.
    std::uint64_t window = 0;

    std::vector<OutOfCodomain> out_of_codomain;
    std::size_t out_of_codomain_count = 0;
    /// Ordered lexicographically by (first, second).
    std::vector<Collision> collisions;
    std::size_t collision_count = 0;
    std::vector<Integer> missed;
    std::size_t missed_count = 0;
};

/// Evaluates the rule on n = 1..bound and checks, in order of precedence,
/// that every output lies in the codomain, that no two inputs share an
/// output, and that the first floor(bound/2) members of the codomain's
/// canonical enumeration are all hit. Finite evidence cannot prove
/// surjectivity; the factor 2 is the slack allowed for the rule listing
/// the codomain in a different order. Throws DomainError if bound is 0.
CheckReport check_pairing(const RuleExpr& rule, SetTag codomain, std::uint64_t bound);

// ---------------------------------------------------------------------------
// Finite sets

/// One maximal pairing between two finite sets: as many pairs as the smaller
/// set has elements, plus whatever remains unpaired on either side.
struct FinitePairing {
    std::vector<std::pair<std::string, std::string>> pairs;  // (element of a, element of b)
    std::vector<std::string> leftover_a;
    std::vector<std::string> leftover_b;
};

enum class Side { a, b };
enum class CardinalityOrder { less, equal, greater };  // |a| compared to |b|

/// "<", "=", ">".
std::string_view to_string(CardinalityOrder order);

constexpr std::size_t kMaxFiniteSetSize = 9;

/// Calls `visit` once for every injection of the smaller list into the
/// larger (both ways when the sizes match). Throws DomainError for
/// duplicate atoms or a list longer than kMaxFiniteSetSize. Returns the
/// number of pairings visited.
std::uint64_t for_each_maximal_pairing(const std::vector<std::string>& a, const std::vector<std::string>& b,
                                       const std::function<void(const FinitePairing&)>& visit);

struct FiniteComparison {
    std::size_t size_a = 0;
    std::size_t size_b = 0;
    std::uint64_t pairings = 0;
    bool any_without_remainder = false;
    std::size_t min_leftover = 0;
    std::size_t max_leftover = 0;
    /// The side that kept unpaired elements in every pairing, if any.
    std::optional<Side> leftover_side;
    CardinalityOrder verdict = CardinalityOrder::equal;
    FinitePairing example;
};

/// Decides |a| vs |b| by enumerating every maximal pairing: equal if one of
/// them leaves nothing over, otherwise the side that always keeps leftovers
/// is the larger.
FiniteComparison compare_finite(const std::vector<std::string>& a, const std::vector<std::string>& b);

}  // namespace cantor
