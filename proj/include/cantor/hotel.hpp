#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cantor/numbers.hpp"

namespace cantor::hotel {

/// Room r -> r + k. Frees rooms 1..k.
struct Shift {
    Natural k;
    friend bool operator==(const Shift&, const Shift&) = default;
};

/// Room r -> 2r. Frees every odd room.
struct Double {
    friend bool operator==(const Double&, const Double&) = default;
};

using PlanStep = std::variant<Shift, Double>;

std::string to_string(const PlanStep& step);
Natural apply_step(const PlanStep& step, const Natural& room);

/// room -> scale * room + offset. Every Shift/Double composition has this form.
struct AffineMap {
    Natural scale{1};
    Natural offset{0};

    Natural operator()(const Natural& room) const { return scale * room + offset; }
    /// This map followed by `next`.
    AffineMap then(const AffineMap& next) const;
};

AffineMap as_affine(const PlanStep& step);

/// A sequence of reassignment primitives applied left to right.
class ReassignmentPlan {
public:
    ReassignmentPlan() = default;
    explicit ReassignmentPlan(std::vector<PlanStep> steps) : steps_(std::move(steps)) {}

    ReassignmentPlan& then(PlanStep step) {
        steps_.push_back(std::move(step));
        return *this;
    }

    const std::vector<PlanStep>& steps() const noexcept { return steps_; }

    /// Pushes a room through the steps one at a time.
    Natural apply(const Natural& room) const;
    /// The whole plan folded into a single affine map.
    AffineMap composed() const;

private:
    std::vector<PlanStep> steps_;
};

/// A guest, identified by arrival cohort and 1-based position within it.
/// Cohort 0 is the hotel's original occupants.
struct Guest {
    std::size_t cohort = 0;
    Natural index;

    std::string str() const;  // "cohort:index"
    friend bool operator==(const Guest&, const Guest&) = default;
    friend auto operator<=>(const Guest&, const Guest&) = default;
};

enum class CohortKind { initial, finite, countable };

struct Cohort {
    CohortKind kind = CohortKind::initial;
    Natural size;              // finite cohorts only
    std::size_t arrived_after = 0;  // plan steps already applied when it moved in

    /// Room given to guest i on arrival: i, or 2i-1 for a countable cohort.
    Natural first_room(const Natural& index) const;
    bool has_guest(const Natural& index) const;
};

/// Hilbert's hotel: every room 1, 2, 3, ... is taken, yet it always has room
/// for more. Nothing is materialized; the state is the list of reassignments
/// applied so far plus one record per arriving cohort, and every query is
/// computed from those. States are immutable values.
class HotelState {
public:
    /// Original guest i in room i, for every i >= 1.
    static HotelState new_full_hotel();

    /// Everyone moves up one room; the newcomer takes room 1.
    HotelState check_in_one() const;
    /// Everyone moves up k rooms; newcomer i takes room i. Requires k >= 1.
    HotelState check_in_finite(const Natural& k) const;
    /// Everyone moves from r to 2r; newcomer i takes odd room 2i-1.
    HotelState check_in_countably_many() const;

    /// Throws UnknownGuestError for a cohort that never arrived or an index
    /// outside it.
    Natural room_of(const Guest& guest) const;

    /// Runs the plan backwards from `room` to find who took it. Throws
    /// DomainError for room 0. Empty only if a reassignment freed a room
    /// that no cohort filled, which check-ins never do.
    std::optional<Guest> guest_in(const Natural& room) const;

    const ReassignmentPlan& plan_history() const noexcept { return plan_; }
    const std::vector<Cohort>& cohorts() const noexcept { return cohorts_; }
    std::size_t newest_cohort() const noexcept { return cohorts_.size() - 1; }

    /// Affine map from a cohort's arrival rooms to its current rooms.
    AffineMap cohort_map(std::size_t cohort) const;

    /// State before the newest check-in; nullopt for a fresh hotel.
    std::optional<HotelState> previous() const;

private:
    HotelState() = default;
    HotelState arrive(PlanStep step, Cohort cohort) const;

    ReassignmentPlan plan_;
    std::vector<Cohort> cohorts_;
};

struct AuditReport {
    std::uint64_t sample = 0;
    bool injective = true;   // no two guests share a room <= sample
    bool total = true;       // every room <= sample is occupied
    bool round_trip = true;  // room_of(guest_in(r)) == r for every occupied room
    std::vector<std::uint64_t> occupancy;  // rooms <= sample held by each cohort
    std::vector<std::pair<Guest, Guest>> collisions;
    std::vector<Natural> vacant;
    /// Set when the newest cohort arrived by doubling: odd rooms hold the
    /// newcomers 1, 2, 3, ... and every earlier guest sits at twice the room
    /// they had before.
    std::optional<bool> doubling_placement;

    bool ok() const { return injective && total && round_trip && doubling_placement.value_or(true); }
};

/// Checks rooms 1..sample and every guest whose room falls in that range.
/// Throws DomainError if sample is 0.
AuditReport audit(const HotelState& state, std::uint64_t sample);

}  // namespace cantor::hotel
