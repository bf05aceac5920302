#pragma once

// Constructions: writhe/turning gadgets on a single strand, crossing-free
// realizations of cap/cup cycles, twisted realizations carrying prescribed
// writhe, and the reduction that pairs an input knot with a canonical
// partner diagram sharing its invariants.

#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "core.hpp"
#include "invariants.hpp"
#include "strands.hpp"

namespace braidword {

namespace detail {

// Appends one 3-slice gadget (cap, braiding, cup) acting on the single
// strand at wire position `at`.  The `down` variants take a downward
// strand.  Gadgets and their (writhe, turning) contributions:
//   a: (+1, +2)   b: (-1, -2)   c: (+1, -2)   d: (-1, +2)
inline void append_gadget(std::vector<Slice>& out, char name, bool down, int at) {
    const int lo = at;
    const int hi = at + 1;
    switch (name) {
    case 'a':
        if (down) { out.push_back(cap_r(hi)); out.push_back(braid_neg(lo)); out.push_back(cup_l(lo)); }
        else      { out.push_back(cap_r(lo)); out.push_back(braid_neg(hi)); out.push_back(cup_l(hi)); }
        break;
    case 'b':
        if (down) { out.push_back(cap_l(lo)); out.push_back(braid_pos(hi)); out.push_back(cup_r(hi)); }
        else      { out.push_back(cap_l(hi)); out.push_back(braid_pos(lo)); out.push_back(cup_r(lo)); }
        break;
    case 'c':
        if (down) { out.push_back(cap_l(lo)); out.push_back(braid_neg(hi)); out.push_back(cup_r(hi)); }
        else      { out.push_back(cap_l(hi)); out.push_back(braid_neg(lo)); out.push_back(cup_r(lo)); }
        break;
    case 'd':
        if (down) { out.push_back(cap_r(hi)); out.push_back(braid_pos(lo)); out.push_back(cup_l(lo)); }
        else      { out.push_back(cap_r(lo)); out.push_back(braid_pos(hi)); out.push_back(cup_l(hi)); }
        break;
    default:
        throw PrecondViolation(std::string("unknown gadget '") + name + "'");
    }
}

}  // namespace detail

// One of the four named single-strand gadgets, as a diagram on one wire.
[[nodiscard]] inline Diagram gadget(char name, bool down = false) {
    Diagram d;
    d.domain = {down ? label_down : label_up};
    detail::append_gadget(d.slices, name, down, 0);
    return d;
}

// A single-strand diagram with prescribed writhe w and turning number t.
// Requires 2w + t divisible by 4; built from |p| copies of gadget a or b
// with p = (2w+t)/4 followed by |q| copies of c or d with q = (2w-t)/4.
[[nodiscard]] inline Diagram writhe_turning_straight(long long w, long long t,
                                                     bool down = false) {
    if (((2 * w + t) % 4 + 4) % 4 != 0)
        throw PrecondViolation("writhe_turning_straight needs 2w + t divisible by 4");
    const long long p = (2 * w + t) / 4;
    const long long q = (2 * w - t) / 4;
    Diagram d;
    d.domain = {down ? label_down : label_up};
    for (long long i = 0; i < std::llabs(p); ++i)
        detail::append_gadget(d.slices, p > 0 ? 'a' : 'b', down, 0);
    for (long long i = 0; i < std::llabs(q); ++i)
        detail::append_gadget(d.slices, q > 0 ? 'c' : 'd', down, 0);
    return d;
}

// ---------------------------------------------------------------------------
// Twisted cap/cup cycles

// A cap/cup symbol together with an integer writhe to be spent in local
// twists next to it.
struct TwistedCapCup {
    SliceKind symbol{};
    long long writhe = 0;

    friend bool operator==(const TwistedCapCup&, const TwistedCapCup&) = default;
};

using TwistedCycle = std::vector<TwistedCapCup>;

// Flip capR <-> capL / cupR <-> cupL.
[[nodiscard]] constexpr SliceKind flip_turn(SliceKind k) {
    switch (k) {
    case SliceKind::CapR: return SliceKind::CapL;
    case SliceKind::CapL: return SliceKind::CapR;
    case SliceKind::CupR: return SliceKind::CupL;
    case SliceKind::CupL: return SliceKind::CupR;
    default: throw PrecondViolation("flip_turn is defined for caps and cups only");
    }
}

// Turning number of a twisted cycle: an odd writhe flips the sign of its
// element's contribution.
[[nodiscard]] inline int twisted_turning(const TwistedCycle& c) {
    int t = 0;
    for (const auto& e : c) {
        const int s = turn_sign(e.symbol);
        t += (e.writhe % 2 == 0) ? s : -s;
    }
    return t;
}

[[nodiscard]] inline long long total_writhe(const TwistedCycle& c) {
    long long w = 0;
    for (const auto& e : c) w += e.writhe;
    return w;
}

// The underlying cap/cup cycle, forgetting writhes.
[[nodiscard]] inline CapCupCycle underlying(const TwistedCycle& c) {
    std::vector<SliceKind> ks;
    ks.reserve(c.size());
    for (const auto& e : c) ks.push_back(e.symbol);
    return CapCupCycle(std::move(ks));
}

// The shadow: each symbol flipped when its writhe is odd.
[[nodiscard]] inline std::vector<SliceKind> shadow(const TwistedCycle& c) {
    std::vector<SliceKind> ks;
    ks.reserve(c.size());
    for (const auto& e : c)
        ks.push_back(e.writhe % 2 == 0 ? e.symbol : flip_turn(e.symbol));
    return ks;
}

// Moves one unit of writhe from element i to element i+1 (cyclically).
// Leaves the underlying cycle and the total writhe unchanged.
[[nodiscard]] inline TwistedCycle diamond_step(TwistedCycle c, std::size_t i) {
    if (i >= c.size()) throw PrecondViolation("diamond_step index out of range");
    c[i].writhe -= 1;
    c[(i + 1) % c.size()].writhe += 1;
    return c;
}

// ---------------------------------------------------------------------------
// Realization

namespace detail {

[[nodiscard]] inline bool alternates_cyclically(const std::vector<SliceKind>& seq) {
    if (seq.empty() || seq.size() % 2 != 0) return false;
    for (std::size_t k = 0; k < seq.size(); ++k)
        if (is_cap(seq[k]) == is_cap(seq[(k + 1) % seq.size()])) return false;
    return true;
}

// Builds a crossing-free closed diagram whose strand meets the given
// turning points in cyclic order starting from seq[0].  Also returns, for
// each sequence element, the index of its slice.
//
// Recursive scheme: the 2-element sequence is a single cap over a cup; a
// longer sequence drops its first adjacent (+1, -1) turning pair and grafts
// the pair back as a zig-zag on the strand of the surviving predecessor —
// below a cap predecessor, above a cup predecessor.
[[nodiscard]] inline std::pair<std::vector<Slice>, std::vector<int>> realize_seq(
    const std::vector<SliceKind>& seq) {
    const std::size_t n = seq.size();
    if (n == 2) {
        const bool cap_first = is_cap(seq[0]);
        const SliceKind cap = cap_first ? seq[0] : seq[1];
        const SliceKind cup = cap_first ? seq[1] : seq[0];
        if (!((cap == SliceKind::CapR && cup == SliceKind::CupL) ||
              (cap == SliceKind::CapL && cup == SliceKind::CupR)))
            throw PrecondViolation("2-cycle must pair capR/cupL or capL/cupR");
        std::vector<Slice> slices{{cap, 0, -1}, {cup, 0, -1}};
        std::vector<int> map = cap_first ? std::vector<int>{0, 1}
                                         : std::vector<int>{1, 0};
        return {std::move(slices), std::move(map)};
    }

    std::size_t i = n;
    for (std::size_t k = 0; k < n; ++k) {
        if (turn_sign(seq[k]) == +1 && turn_sign(seq[(k + 1) % n]) == -1) {
            i = k;
            break;
        }
    }
    if (i == n) throw PrecondViolation("cycle has no adjacent (+1, -1) turning pair");
    const std::size_t j = (i + 1) % n;
    const std::size_t pred = (i + n - 1) % n;

    std::vector<SliceKind> rest;
    std::vector<std::size_t> rest_orig;
    rest.reserve(n - 2);
    rest_orig.reserve(n - 2);
    for (std::size_t k = 0; k < n; ++k)
        if (k != i && k != j) {
            rest.push_back(seq[k]);
            rest_orig.push_back(k);
        }

    auto [slices, submap] = realize_seq(rest);

    std::size_t pred_rest = rest.size();
    for (std::size_t k = 0; k < rest_orig.size(); ++k)
        if (rest_orig[k] == pred) { pred_rest = k; break; }
    const int jp = submap[pred_rest];
    const Slice& ps = slices[static_cast<std::size_t>(jp)];

    int insert_at = 0;
    int leg = 0;
    SliceKind first_kind{}, second_kind{};
    std::size_t first_elem = 0, second_elem = 0;
    if (is_cup(seq[i])) {
        // Removed (cupL, capL); the predecessor is a cap.  Graft the pair
        // just below it, on its downward leg.
        leg = ps.kind == SliceKind::CapR ? ps.offset + 1 : ps.offset;
        insert_at = jp + 1;
        first_kind = SliceKind::CapL;
        first_elem = j;
        second_kind = SliceKind::CupL;
        second_elem = i;
    } else {
        // Removed (capR, cupR); the predecessor is a cup.  Graft the pair
        // just above it, on its upward leg.
        leg = ps.kind == SliceKind::CupR ? ps.offset + 1 : ps.offset;
        insert_at = jp;
        first_kind = SliceKind::CapR;
        first_elem = i;
        second_kind = SliceKind::CupR;
        second_elem = j;
    }

    slices.insert(slices.begin() + insert_at,
                  {Slice{first_kind, leg, -1}, Slice{second_kind, leg + 1, -1}});
    std::vector<int> map(n, -1);
    for (std::size_t k = 0; k < rest_orig.size(); ++k)
        map[rest_orig[k]] = submap[k] + (submap[k] >= insert_at ? 2 : 0);
    map[first_elem] = insert_at;
    map[second_elem] = insert_at + 1;
    return {std::move(slices), std::move(map)};
}

}  // namespace detail

// Crossing-free closed knot diagram with the given cap/cup cycle.
// Requires an alternating cycle with turning number ±2.
[[nodiscard]] inline Diagram realize_cycle(const CapCupCycle& c) {
    if (!c.alternates())
        throw PrecondViolation("realization needs an alternating cap/cup cycle");
    const int t = c.turning_number();
    if (t != 2 && t != -2)
        throw PrecondViolation("realization needs turning number +2 or -2");
    Diagram d;
    d.slices = detail::realize_seq(c.turns()).first;
    return d;
}

// Realization of a twisted cycle: the shadow is realized crossing-free,
// then every turn regains its original symbol surrounded by |writhe| local
// twists — after a cap, before a cup — whose crossing signs are chosen by
// querying the writhe contribution on the actual wire orientations.  The
// result has total writhe W(c) and underlying cycle U(c).
[[nodiscard]] inline Diagram realize_twisted(const TwistedCycle& c) {
    if (!detail::alternates_cyclically(shadow(c)))
        throw PrecondViolation("realization needs an alternating cap/cup cycle");
    const int t = twisted_turning(c);
    if (t != 2 && t != -2)
        throw PrecondViolation("realization needs twisted turning number +2 or -2");

    auto [base, map] = detail::realize_seq(shadow(c));
    std::vector<std::size_t> element_of(base.size());
    for (std::size_t e = 0; e < map.size(); ++e)
        element_of[static_cast<std::size_t>(map[e])] = e;

    Diagram out;
    ObjectWord level;
    const auto emit = [&](const Slice& s) {
        detail::apply_slice(level, s, *out.signature, out.slices.size());
        out.slices.push_back(s);
    };
    const auto emit_twists = [&](int at, long long w) {
        if (w == 0) return;
        const int op = orientation_sign(level[static_cast<std::size_t>(at)]) *
                       orientation_sign(level[static_cast<std::size_t>(at) + 1]);
        const int want = w > 0 ? +1 : -1;
        const Slice twist = want * op > 0 ? braid_pos(at) : braid_neg(at);
        for (long long k = 0; k < std::llabs(w); ++k) emit(twist);
    };

    for (std::size_t s = 0; s < base.size(); ++s) {
        const auto& e = c[element_of[s]];
        const Slice turn{e.symbol, base[s].offset, -1};
        if (is_cap(e.symbol)) {
            emit(turn);
            emit_twists(turn.offset, e.writhe);
        } else {
            emit_twists(turn.offset, e.writhe);
            emit(turn);
        }
    }
    return out;
}

// The canonical diagram with cap/cup cycle c and writhe w; requires the
// knot parity w + turning/2 odd.  All writhe is carried by local twists:
// the cycle is first rebalanced by writhe transfers until its twisted
// turning number is +-2, then w lands on the first element.
[[nodiscard]] inline Diagram realize_cycle_with_writhe(const CapCupCycle& c, long long w) {
    if (!c.alternates())
        throw PrecondViolation("realization needs an alternating cap/cup cycle");
    const int t = c.turning_number();
    if (((w + t / 2) % 2 + 2) % 2 != 1)
        throw PrecondViolation("writhe and half turning number must sum to an odd value");

    TwistedCycle tc;
    tc.reserve(c.size());
    for (SliceKind k : c.turns()) tc.push_back({k, 0});

    while (true) {
        const int tt = twisted_turning(tc);
        if (tt == 2 || tt == -2 || tt == 0) break;
        const int s = tt > 0 ? +1 : -1;
        int first = -1, second = -1;
        for (std::size_t k = 0; k < tc.size() && second < 0; ++k) {
            const int contrib = (tc[k].writhe % 2 == 0 ? 1 : -1) * turn_sign(tc[k].symbol);
            if (contrib != s) continue;
            if (first < 0) first = static_cast<int>(k);
            else second = static_cast<int>(k);
        }
        if (second < 0)
            throw PrecondViolation("cycle rebalancing ran out of turning points");
        tc[static_cast<std::size_t>(first)].writhe += 1;
        tc[static_cast<std::size_t>(second)].writhe -= 1;
    }

    tc[0].writhe += w;
    return realize_twisted(tc);
}

// ---------------------------------------------------------------------------
// Padding and reduction instances

// Returns a copy of g carrying the writhe and turning number of f, obtained
// by splicing a writhe_turning_straight chain into the strand entering the
// earliest cup of g.  For two knots the required parity always holds.
[[nodiscard]] inline Diagram pad_to_match(const Diagram& f, const Diagram& g) {
    if (!is_knot(f) || !is_knot(g))
        throw NotAKnotError("pad_to_match needs two closed single-component diagrams");
    const long long dw = writhe(f) - writhe(g);
    const long long dt = turning_number(f) - turning_number(g);
    if (((2 * dw + dt) % 4 + 4) % 4 != 0)
        throw PrecondViolation("pad_to_match invariant deltas are not realizable");
    if (dw == 0 && dt == 0) return g;

    std::size_t cup = g.slices.size();
    for (std::size_t i = 0; i < g.slices.size(); ++i)
        if (is_cup(g.slices[i].kind)) { cup = i; break; }
    if (cup == g.slices.size())
        throw NotAKnotError("knot diagram has no cup");
    const Slice& cs = g.slices[cup];
    // The downward input of the cup: left leg of cupR, right leg of cupL.
    const int leg = cs.kind == SliceKind::CupR ? cs.offset : cs.offset + 1;

    const long long p = (2 * dw + dt) / 4;
    const long long q = (2 * dw - dt) / 4;
    std::vector<Slice> chain;
    for (long long i = 0; i < std::llabs(p); ++i)
        detail::append_gadget(chain, p > 0 ? 'a' : 'b', true, leg);
    for (long long i = 0; i < std::llabs(q); ++i)
        detail::append_gadget(chain, q > 0 ? 'c' : 'd', true, leg);

    Diagram out = g;
    out.slices.insert(out.slices.begin() + static_cast<std::ptrdiff_t>(cup),
                      chain.begin(), chain.end());
    return out;
}

// A reduction instance: the input knot and its canonical partner diagram.
// The two sides always share writhe, turning number and cap/cup cycle; the
// input is the unknot exactly when the two sides are equal as morphisms.
struct WordProblemInstance {
    Diagram lhs;
    Diagram rhs;
};

[[nodiscard]] inline WordProblemInstance build_instance(const Diagram& k) {
    if (!is_knot(k)) throw NotAKnotError("reduction needs a closed single-component diagram");
    WordProblemInstance inst;
    inst.lhs = k;
    inst.rhs = realize_cycle_with_writhe(cap_cup_cycle(k), writhe(k));
    return inst;
}

}  // namespace braidword
