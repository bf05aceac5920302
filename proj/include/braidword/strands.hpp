#pragma once

// Strand traversal over cap/cup diagrams: walking a strand through the
// slices, counting closed components, extracting the cyclic sequence of
// turning points of a knot, and assigning orientations to an unoriented
// closed diagram.

#include <utility>
#include <vector>

#include "core.hpp"
#include "parse.hpp"

namespace braidword {

namespace detail {

// Slice geometry stripped down to what a strand walk needs.
struct Geom {
    int inputs = 0;
    int outputs = 0;
    int offset = 0;
    bool cap = false;
    bool cup = false;
};

[[nodiscard]] inline std::vector<Geom> geometry(const Diagram& d) {
    std::vector<Geom> out;
    out.reserve(d.slices.size());
    for (const auto& s : d.slices) {
        if (s.kind == SliceKind::Named)
            throw PrecondViolation(
                "strand traversal requires a cap/cup diagram without named generators");
        Geom g;
        g.offset = s.offset;
        g.cap = is_cap(s.kind);
        g.cup = is_cup(s.kind);
        g.inputs = g.cap ? 0 : 2;
        g.outputs = g.cup ? 0 : 2;
        out.push_back(g);
    }
    return out;
}

[[nodiscard]] inline std::vector<Geom> geometry(const UnorientedDiagram& d) {
    std::vector<Geom> out;
    out.reserve(d.slices.size());
    for (const auto& s : d.slices) {
        Geom g;
        g.offset = s.offset;
        g.cap = s.kind == USliceKind::Cap;
        g.cup = s.kind == USliceKind::Cup;
        g.inputs = g.cap ? 0 : 2;
        g.outputs = g.cup ? 0 : 2;
        out.push_back(g);
    }
    return out;
}

// Checks offsets/widths of a geometry run starting from a given width;
// returns the level widths.  Throws TypeError on any overflow.
[[nodiscard]] inline std::vector<int> level_widths(const std::vector<Geom>& gs,
                                                   int start_width) {
    std::vector<int> widths{start_width};
    int w = start_width;
    for (std::size_t i = 0; i < gs.size(); ++i) {
        const auto& g = gs[i];
        if (g.offset < 0 || g.offset + g.inputs > w)
            type_fail(i, "offset out of range");
        w += g.outputs - g.inputs;
        widths.push_back(w);
    }
    return widths;
}

// A point on a strand walk: sitting at level `level`, wire position `pos`,
// about to move down (into slices[level]) or up (into slices[level-1]).
struct TraceState {
    int level = 0;
    int pos = 0;
    bool down = true;

    friend bool operator==(const TraceState&, const TraceState&) = default;
};

// Advances one step.  Returns the slice index of a turning point when the
// strand turned around at a cap or cup, or -1 otherwise.
inline int advance(const std::vector<Geom>& gs, TraceState& s) {
    if (s.down) {
        const Geom& g = gs[static_cast<std::size_t>(s.level)];
        if (s.pos < g.offset) {
            ++s.level;
        } else if (s.pos >= g.offset + g.inputs) {
            s.pos += g.outputs - g.inputs;
            ++s.level;
        } else if (g.cup) {
            const int turned_at = s.level;
            s.pos = g.offset + (s.pos == g.offset ? 1 : 0);
            s.down = false;
            return turned_at;
        } else {  // braiding input
            s.pos = g.offset + (s.pos == g.offset ? 1 : 0);
            ++s.level;
        }
    } else {
        const Geom& g = gs[static_cast<std::size_t>(s.level - 1)];
        if (s.pos < g.offset) {
            --s.level;
        } else if (s.pos >= g.offset + g.outputs) {
            s.pos += g.inputs - g.outputs;
            --s.level;
        } else if (g.cap) {
            const int turned_at = s.level - 1;
            s.pos = g.offset + (s.pos == g.offset ? 1 : 0);
            s.down = true;
            return turned_at;
        } else {
            s.pos = g.offset + (s.pos == g.offset ? 1 : 0);
            --s.level;
        }
    }
    return -1;
}

// Walks the closed strand through `start` until it returns there, invoking
// visit(state_before_step, turn_slice_or_minus_1) for every step.
template <class Visit>
inline void trace_loop(const std::vector<Geom>& gs, TraceState start, Visit&& visit) {
    TraceState s = start;
    do {
        TraceState before = s;
        const int turn = advance(gs, s);
        visit(before, turn);
    } while (!(s == start));
}

// Marks every port (level, pos) of the loop through `start` in `seen`.
// A closed strand passes each port exactly once, in one direction.
inline void mark_loop(const std::vector<Geom>& gs, TraceState start,
                      std::vector<std::vector<char>>& seen) {
    trace_loop(gs, start, [&](const TraceState& s, int) {
        seen[static_cast<std::size_t>(s.level)][static_cast<std::size_t>(s.pos)] = 1;
    });
}

[[nodiscard]] inline int component_count(const std::vector<Geom>& gs) {
    const auto widths = level_widths(gs, 0);
    if (widths.back() != 0) throw PrecondViolation("component count needs a closed diagram");
    std::vector<std::vector<char>> seen;
    seen.reserve(widths.size());
    for (int w : widths) seen.emplace_back(static_cast<std::size_t>(w), 0);

    int components = 0;
    for (std::size_t i = 0; i < gs.size(); ++i) {
        if (!gs[i].cap) continue;
        const auto below = static_cast<std::size_t>(i) + 1;
        if (seen[below][static_cast<std::size_t>(gs[i].offset)]) continue;
        ++components;
        mark_loop(gs, {static_cast<int>(i) + 1, gs[i].offset, true}, seen);
    }
    return components;
}

}  // namespace detail

// Number of closed strands in a closed cap/cup diagram.
[[nodiscard]] inline int component_count(const Diagram& d) {
    if (!d.domain.empty() || !is_closed(d))
        throw PrecondViolation("component count needs a closed diagram");
    return detail::component_count(detail::geometry(d));
}

[[nodiscard]] inline int component_count(const UnorientedDiagram& d) {
    return detail::component_count(detail::geometry(d));
}

[[nodiscard]] inline bool is_knot(const Diagram& d) {
    return d.domain.empty() && is_closed(d) && !has_named_slice(d) &&
           component_count(d) == 1;
}

// Slice indices of the turning points of a knot, in strand order, starting
// from the earliest cap and leaving it along its downward leg.
[[nodiscard]] inline std::vector<int> knot_turn_slices(const Diagram& d) {
    if (!is_knot(d)) throw NotAKnotError("expected a closed single-component diagram");
    const auto gs = detail::geometry(d);

    int start = -1;
    for (std::size_t i = 0; i < d.slices.size(); ++i)
        if (is_cap(d.slices[i].kind)) { start = static_cast<int>(i); break; }
    if (start < 0) throw NotAKnotError("diagram has no strands");

    const Slice& cap = d.slices[static_cast<std::size_t>(start)];
    const int down_leg = cap.kind == SliceKind::CapR ? cap.offset + 1 : cap.offset;

    std::vector<int> turns;
    detail::trace_loop(gs, {start + 1, down_leg, true}, [&](const detail::TraceState&, int t) {
        if (t >= 0) turns.push_back(t);
    });
    // The walk re-enters the start cap as its final turn; rotate it to the front.
    if (turns.empty() || turns.back() != start)
        throw DiagramError("turn walk did not close at the start cap");
    turns.pop_back();
    turns.insert(turns.begin(), start);
    return turns;
}

// Assigns orientations to an unoriented closed single-component diagram by
// walking the strand downward from the right leg of the earliest cap.  With
// reverse=true the opposite global orientation is chosen.  The crossing
// signs are orientation-independent and stay as written.
[[nodiscard]] inline Diagram orient(const UnorientedDiagram& u, bool reverse = false) {
    const auto gs = detail::geometry(u);
    if (detail::component_count(gs) != 1)
        throw NotAKnotError("orientation assignment needs a single closed strand");

    int start = -1;
    for (std::size_t i = 0; i < u.slices.size(); ++i)
        if (u.slices[i].kind == USliceKind::Cap) { start = static_cast<int>(i); break; }

    const auto widths = detail::level_widths(gs, 0);
    std::vector<std::vector<char>> downward;
    downward.reserve(widths.size());
    for (int w : widths) downward.emplace_back(static_cast<std::size_t>(w), 0);

    detail::trace_loop(
        gs, {start + 1, u.slices[static_cast<std::size_t>(start)].offset + 1, true},
        [&](const detail::TraceState& s, int) {
            downward[static_cast<std::size_t>(s.level)][static_cast<std::size_t>(s.pos)] =
                s.down ? 1 : 0;
        });

    const auto leg_down = [&](std::size_t level, int pos) {
        bool dn = downward[level][static_cast<std::size_t>(pos)] != 0;
        return reverse ? !dn : dn;
    };

    Diagram d;
    for (std::size_t i = 0; i < u.slices.size(); ++i) {
        const auto& s = u.slices[i];
        switch (s.kind) {
        case USliceKind::Cap:
            // Left leg travelling up means labels (up, down): a right cap.
            d.slices.push_back(leg_down(i + 1, s.offset) ? cap_l(s.offset)
                                                         : cap_r(s.offset));
            break;
        case USliceKind::Cup:
            // Left leg travelling down means labels (down, up): a right cup.
            d.slices.push_back(leg_down(i, s.offset) ? cup_r(s.offset)
                                                     : cup_l(s.offset));
            break;
        case USliceKind::BraidPos:
            d.slices.push_back(braid_pos(s.offset));
            break;
        case USliceKind::BraidNeg:
            d.slices.push_back(braid_neg(s.offset));
            break;
        }
    }
    return d;
}

// Forgets orientations.
[[nodiscard]] inline UnorientedDiagram unorient(const Diagram& d) {
    UnorientedDiagram u;
    for (const auto& s : d.slices) {
        if (s.kind == SliceKind::Named)
            throw PrecondViolation("cannot strip orientations from named generators");
        USliceKind k = is_cap(s.kind)   ? USliceKind::Cap
                       : is_cup(s.kind) ? USliceKind::Cup
                       : s.kind == SliceKind::BraidPos ? USliceKind::BraidPos
                                                       : USliceKind::BraidNeg;
        u.slices.push_back({k, s.offset});
    }
    return u;
}

}  // namespace braidword
