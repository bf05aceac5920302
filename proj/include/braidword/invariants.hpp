#pragma once

// Diagram invariants preserved by the rewrite moves: writhe, turning
// number, the cyclic cap/cup sequence of a knot, and bridge-position data.

#include <algorithm>
#include <string>
#include <vector>

#include "core.hpp"
#include "strands.hpp"

namespace braidword {

// Sum over crossings of crossing sign times the orientation signs of the
// two wires entering the crossing.
[[nodiscard]] inline long long writhe(const Diagram& d) {
    const auto levels = typecheck(d);
    long long w = 0;
    for (std::size_t i = 0; i < d.slices.size(); ++i) {
        const auto& s = d.slices[i];
        if (!is_braid(s.kind)) continue;
        const auto& in = levels[i];
        const int o1 = orientation_sign(in[static_cast<std::size_t>(s.offset)]);
        const int o2 = orientation_sign(in[static_cast<std::size_t>(s.offset) + 1]);
        w += crossing_sign(s.kind) * o1 * o2;
    }
    return w;
}

// Signed contribution of one turning point: +1 for capR/cupL, -1 for
// capL/cupR.
[[nodiscard]] constexpr int turn_sign(SliceKind k) {
    switch (k) {
    case SliceKind::CapR:
    case SliceKind::CupL: return +1;
    case SliceKind::CapL:
    case SliceKind::CupR: return -1;
    default:
        throw PrecondViolation("turning sign is defined for caps and cups only");
    }
}

// Sum of turn signs over all caps and cups.  Defined only for diagrams
// without named generator slices.
[[nodiscard]] inline int turning_number(const Diagram& d) {
    int t = 0;
    for (const auto& s : d.slices) {
        if (s.kind == SliceKind::Named)
            throw PrecondViolation("turning number is undefined with named generators");
        if (is_turn(s.kind)) t += turn_sign(s.kind);
    }
    return t;
}

// The cyclic sequence of cap/cup kinds met along a knot strand, considered
// up to rotation.  Stored in canonical form: the lexicographically least
// rotation under the kind order capR < capL < cupR < cupL.
class CapCupCycle {
public:
    CapCupCycle() = default;

    explicit CapCupCycle(std::vector<SliceKind> turns) : turns_(std::move(turns)) {
        for (SliceKind k : turns_)
            if (!is_turn(k))
                throw PrecondViolation("cap/cup cycle entries must be caps or cups");
        canonicalize();
    }

    [[nodiscard]] const std::vector<SliceKind>& turns() const noexcept { return turns_; }
    [[nodiscard]] std::size_t size() const noexcept { return turns_.size(); }
    [[nodiscard]] bool empty() const noexcept { return turns_.empty(); }

    [[nodiscard]] int turning_number() const {
        int t = 0;
        for (SliceKind k : turns_) t += turn_sign(k);
        return t;
    }

    // True when caps and cups strictly alternate around the cycle.
    [[nodiscard]] bool alternates() const {
        if (turns_.size() % 2 != 0) return false;
        for (std::size_t i = 0; i < turns_.size(); ++i) {
            const SliceKind a = turns_[i];
            const SliceKind b = turns_[(i + 1) % turns_.size()];
            if (is_cap(a) == is_cap(b)) return false;
        }
        return !turns_.empty();
    }

    friend bool operator==(const CapCupCycle&, const CapCupCycle&) = default;

    [[nodiscard]] std::string str() const {
        std::string out = "(";
        for (std::size_t i = 0; i < turns_.size(); ++i) {
            if (i) out += ", ";
            out += kind_name(turns_[i]);
        }
        return out + ")";
    }

private:
    void canonicalize() {
        if (turns_.empty()) return;
        const std::size_t n = turns_.size();
        std::size_t best = 0;
        for (std::size_t cand = 1; cand < n; ++cand) {
            for (std::size_t k = 0; k < n; ++k) {
                const auto a = turns_[(cand + k) % n];
                const auto b = turns_[(best + k) % n];
                if (a != b) {
                    if (a < b) best = cand;
                    break;
                }
            }
        }
        std::rotate(turns_.begin(), turns_.begin() + static_cast<std::ptrdiff_t>(best),
                    turns_.end());
    }

    std::vector<SliceKind> turns_;
};

// The cap/cup cycle of a closed single-component diagram.
[[nodiscard]] inline CapCupCycle cap_cup_cycle(const Diagram& d) {
    const auto turn_slices = knot_turn_slices(d);
    std::vector<SliceKind> kinds;
    kinds.reserve(turn_slices.size());
    for (int i : turn_slices) kinds.push_back(d.slices[static_cast<std::size_t>(i)].kind);
    return CapCupCycle(std::move(kinds));
}

// A closed diagram is in bridge position when every cap precedes every cup.
[[nodiscard]] inline bool is_bridge_position(const Diagram& d) {
    int last_cap = -1;
    int first_cup = static_cast<int>(d.slices.size());
    for (std::size_t i = 0; i < d.slices.size(); ++i) {
        if (is_cap(d.slices[i].kind)) last_cap = static_cast<int>(i);
        if (is_cup(d.slices[i].kind) && first_cup == static_cast<int>(d.slices.size()))
            first_cup = static_cast<int>(i);
    }
    return last_cap < first_cup;
}

// Number of caps; for a diagram in bridge position this is its bridge count,
// and the rewrite moves never change it.
[[nodiscard]] inline int bridge_number(const Diagram& d) {
    int caps = 0;
    for (const auto& s : d.slices) caps += is_cap(s.kind) ? 1 : 0;
    return caps;
}

struct InvariantReport {
    long long writhe = 0;
    int turning = 0;
    int components = 0;
    bool is_knot = false;
    CapCupCycle cycle;  // meaningful only when is_knot
    int bridge_number = 0;
    bool bridge_position = false;
};

// Full invariant snapshot of a closed cap/cup diagram.
[[nodiscard]] inline InvariantReport invariant_report(const Diagram& d) {
    if (!is_closed(d))
        throw PrecondViolation("invariant report needs a closed diagram");
    InvariantReport r;
    r.writhe = writhe(d);
    r.turning = turning_number(d);
    r.components = component_count(d);
    r.is_knot = r.components == 1;
    if (r.is_knot) r.cycle = cap_cup_cycle(d);
    r.bridge_number = bridge_number(d);
    r.bridge_position = is_bridge_position(d);
    return r;
}

}  // namespace braidword
