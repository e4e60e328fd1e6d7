#include "cantor/hotel.hpp"

#include <map>

namespace cantor::hotel {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

std::string to_string(const PlanStep& step) {
    return std::visit(overloaded{[](const Shift& s) { return "shift " + s.k.str(); },
                                 [](const Double&) { return std::string("double"); }},
                      step);
}

Natural apply_step(const PlanStep& step, const Natural& room) {
    return std::visit(overloaded{[&](const Shift& s) { return room + s.k; },
                                 [&](const Double&) { return room * Natural(2); }},
                      step);
}

AffineMap AffineMap::then(const AffineMap& next) const {
    // next(scale * r + offset) = next.scale * scale * r + next.scale * offset + next.offset
    return {next.scale * scale, next.scale * offset + next.offset};
}

AffineMap as_affine(const PlanStep& step) {
    return std::visit(overloaded{[](const Shift& s) { return AffineMap{Natural(1), s.k}; },
                                 [](const Double&) { return AffineMap{Natural(2), Natural(0)}; }},
                      step);
}

Natural ReassignmentPlan::apply(const Natural& room) const {
    Natural r = room;
    for (const auto& step : steps_) r = apply_step(step, r);
    return r;
}

AffineMap ReassignmentPlan::composed() const {
    AffineMap m;
    for (const auto& step : steps_) m = m.then(as_affine(step));
    return m;
}

std::string Guest::str() const {
    return std::to_string(cohort) + ":" + index.str();
}

Natural Cohort::first_room(const Natural& index) const {
    if (kind == CohortKind::countable) return index * Natural(2) - Natural(1);
    return index;
}

bool Cohort::has_guest(const Natural& index) const {
    if (index.is_zero()) return false;
    return kind != CohortKind::finite || index <= size;
}

HotelState HotelState::new_full_hotel() {
    HotelState s;
    s.cohorts_.push_back(Cohort{CohortKind::initial, Natural(0), 0});
    return s;
}

HotelState HotelState::arrive(PlanStep step, Cohort cohort) const {
    HotelState next = *this;
    next.plan_.then(std::move(step));
    cohort.arrived_after = next.plan_.steps().size();
    next.cohorts_.push_back(std::move(cohort));
    return next;
}

HotelState HotelState::check_in_one() const {
    return check_in_finite(Natural(1));
}

HotelState HotelState::check_in_finite(const Natural& k) const {
    if (k.is_zero()) throw DomainError("check_in_finite needs at least one guest");
    return arrive(Shift{k}, Cohort{CohortKind::finite, k, 0});
}

HotelState HotelState::check_in_countably_many() const {
    return arrive(Double{}, Cohort{CohortKind::countable, Natural(0), 0});
}

AffineMap HotelState::cohort_map(std::size_t cohort) const {
    if (cohort >= cohorts_.size()) throw UnknownGuestError("no cohort " + std::to_string(cohort));
    const auto& steps = plan_.steps();
    AffineMap m;
    for (std::size_t i = cohorts_[cohort].arrived_after; i < steps.size(); ++i) m = m.then(as_affine(steps[i]));
    return m;
}

Natural HotelState::room_of(const Guest& guest) const {
    if (guest.cohort >= cohorts_.size() || !cohorts_[guest.cohort].has_guest(guest.index)) {
        throw UnknownGuestError("unknown guest " + guest.str());
    }
    const auto& cohort = cohorts_[guest.cohort];
    const auto& steps = plan_.steps();
    Natural room = cohort.first_room(guest.index);
    for (std::size_t i = cohort.arrived_after; i < steps.size(); ++i) room = apply_step(steps[i], room);
    return room;
}

std::optional<Guest> HotelState::guest_in(const Natural& room) const {
    if (room.is_zero()) throw DomainError("rooms are numbered from 1");
    const auto& steps = plan_.steps();

    // arrivals[i]: the cohort that moved in right after step i.
    std::vector<std::optional<std::size_t>> arrivals(steps.size());
    for (std::size_t c = 1; c < cohorts_.size(); ++c) arrivals[cohorts_[c].arrived_after - 1] = c;

    Natural r = room;
    for (std::size_t i = steps.size(); i-- > 0;) {
        std::optional<Natural> newcomer;
        if (const auto* shift = std::get_if<Shift>(&steps[i])) {
            if (r <= shift->k) {
                newcomer = r;
            } else {
                r = r - shift->k;
            }
        } else if (r.is_even()) {
            r = r / Natural(2);
        } else {
            newcomer = (r + Natural(1)) / Natural(2);
        }
        if (newcomer) {
            if (!arrivals[i]) return std::nullopt;
            return Guest{*arrivals[i], *newcomer};
        }
    }
    return Guest{0, r};
}

std::optional<HotelState> HotelState::previous() const {
    if (plan_.steps().empty()) return std::nullopt;
    HotelState prev;
    auto steps = plan_.steps();
    steps.pop_back();
    prev.plan_ = ReassignmentPlan(std::move(steps));
    prev.cohorts_.assign(cohorts_.begin(), cohorts_.end() - 1);
    return prev;
}

AuditReport audit(const HotelState& state, std::uint64_t sample) {
    if (sample == 0) throw DomainError("audit needs a sample of at least one room");
    AuditReport report;
    report.sample = sample;
    const Natural limit(sample);
    const auto& cohorts = state.cohorts();
    report.occupancy.assign(cohorts.size(), 0);

    // Forward direction: every guest of every cohort whose room is in range.
    // Rooms grow strictly with the guest index, so each cohort is scanned
    // until its guests leave the sample.
    std::map<Natural, Guest> holder;
    for (std::size_t c = 0; c < cohorts.size(); ++c) {
        AffineMap m = state.cohort_map(c);
        for (Natural i(1); cohorts[c].has_guest(i); ++i) {
            Natural room = m(cohorts[c].first_room(i));
            if (room > limit) break;
            Guest g{c, i};
            auto [it, inserted] = holder.emplace(room, g);
            if (!inserted) {
                report.injective = false;
                report.collisions.emplace_back(it->second, g);
            }
        }
    }

    // Backward direction: who is in each room, and does that guest map back.
    for (Natural r(1); r <= limit; ++r) {
        auto g = state.guest_in(r);
        auto it = holder.find(r);
        if (!g) {
            report.total = false;
            report.vacant.push_back(r);
            if (it != holder.end()) report.round_trip = false;
            continue;
        }
        ++report.occupancy[g->cohort];
        if (state.room_of(*g) != r || it == holder.end() || !(it->second == *g)) report.round_trip = false;
    }

    if (cohorts.back().kind == CohortKind::countable) {
        const auto before = *state.previous();
        const std::size_t newest = state.newest_cohort();
        bool placed = true;
        for (Natural r(1); r <= limit && placed; ++r) {
            auto g = state.guest_in(r);
            if (!r.is_even()) {
                placed = g && g->cohort == newest && g->index == (r + Natural(1)) / Natural(2);
            } else {
                placed = g && g == before.guest_in(r / Natural(2));
            }
        }
        report.doubling_placement = placed;
    }
    return report;
}

}  // namespace cantor::hotel
