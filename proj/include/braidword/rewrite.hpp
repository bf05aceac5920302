#pragma once

// The braided monoidal axioms as local rewrite moves on slice lists:
// exchanging slices on disjoint wire intervals, cancelling or inserting
// opposite braiding pairs, and pulling a wire through any generator
// (naturality of the braiding).  On top of the moves: a deterministic
// exchange-sorted canonical form, a bounded bidirectional equality search,
// and bridge-position normalization.

#include <chrono>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "core.hpp"
#include "invariants.hpp"
#include "strands.hpp"

namespace braidword {

enum class MoveKind : std::uint8_t { Exchange, R2Cancel, R2Insert, PullThrough };

// A rewrite move, anchored at a slice index.
//   Exchange:    swap slices index/index+1; `left` picks the adjustment rule
//                (which slice keeps its offset) when both sides are clear.
//   R2Cancel:    delete the opposite braiding pair at index, index+1.
//   R2Insert:    insert such a pair before slice `index` at wire `offset`;
//                `pos_first` puts the positive braiding on top.
//   PullThrough: slide the wire beside the generator at `index` through it;
//                `down` rewrites the crossings-below form from the
//                crossings-above form, `left` uses the left-hand wire, and
//                `positive` fixes the crossing sign when the source pattern
//                contains no crossings to read it from.
struct Move {
    MoveKind kind{};
    int index = 0;
    int offset = 0;
    bool pos_first = false;
    bool down = false;
    bool left = false;
    bool positive = false;

    friend bool operator==(const Move&, const Move&) = default;
};

[[nodiscard]] inline std::string move_str(const Move& m) {
    switch (m.kind) {
    case MoveKind::Exchange:
        return "exchange @ " + std::to_string(m.index) + (m.left ? " left" : " right");
    case MoveKind::R2Cancel:
        return "cancel @ " + std::to_string(m.index);
    case MoveKind::R2Insert:
        return "insert @ " + std::to_string(m.index) + " wire " +
               std::to_string(m.offset) + (m.pos_first ? " +-" : " -+");
    case MoveKind::PullThrough:
        return std::string("pull ") + (m.down ? "down" : "up") + " @ " +
               std::to_string(m.index) + (m.left ? " left" : " right") +
               (m.positive ? " +" : " -");
    }
    return "?";
}

namespace detail {

[[noreturn]] inline void move_fail(const Move& m, const std::string& what) {
    throw InvalidMoveError(move_str(m) + ": " + what);
}

struct ExchangeFit {
    bool right = false;
    bool left = false;
};

// Which exchange adjustments fit for upper slice u over lower slice l.
[[nodiscard]] inline ExchangeFit exchange_fit(const Slice& u, const Slice& l,
                                              const Signature& sig) {
    const auto [mu, nu] = slice_arity(u, sig);
    const auto [ml, nl] = slice_arity(l, sig);
    (void)mu;
    (void)nl;
    ExchangeFit fit;
    fit.right = l.offset >= u.offset + nu;
    fit.left = l.offset + ml <= u.offset;
    return fit;
}

}  // namespace detail

// Applies a move; returns the rewritten diagram together with the move
// that undoes it.  Throws InvalidMoveError when the move does not fit.
[[nodiscard]] inline std::pair<Diagram, Move> apply_move(const Diagram& d, const Move& m) {
    using detail::move_fail;
    const auto& sig = *d.signature;
    const int n = static_cast<int>(d.slices.size());
    Diagram out = d;

    switch (m.kind) {
    case MoveKind::Exchange: {
        if (m.index < 0 || m.index + 1 >= n) move_fail(m, "index out of range");
        Slice u = out.slices[static_cast<std::size_t>(m.index)];
        Slice l = out.slices[static_cast<std::size_t>(m.index) + 1];
        const auto fit = detail::exchange_fit(u, l, sig);
        const auto [mu, nu] = slice_arity(u, sig);
        const auto [ml, nl] = slice_arity(l, sig);
        if (!m.left) {
            if (!fit.right) move_fail(m, "slices overlap on the right rule");
            l.offset += mu - nu;
        } else {
            if (!fit.left) move_fail(m, "slices overlap on the left rule");
            u.offset += nl - ml;
        }
        out.slices[static_cast<std::size_t>(m.index)] = l;
        out.slices[static_cast<std::size_t>(m.index) + 1] = u;
        Move inv = m;
        inv.left = !m.left;
        return {std::move(out), inv};
    }

    case MoveKind::R2Cancel: {
        if (m.index < 0 || m.index + 1 >= n) move_fail(m, "index out of range");
        const Slice a = out.slices[static_cast<std::size_t>(m.index)];
        const Slice b = out.slices[static_cast<std::size_t>(m.index) + 1];
        if (!is_braid(a.kind) || !is_braid(b.kind) || a.offset != b.offset ||
            a.kind == b.kind)
            move_fail(m, "needs an opposite braiding pair at one offset");
        out.slices.erase(out.slices.begin() + m.index, out.slices.begin() + m.index + 2);
        Move inv;
        inv.kind = MoveKind::R2Insert;
        inv.index = m.index;
        inv.offset = a.offset;
        inv.pos_first = a.kind == SliceKind::BraidPos;
        return {std::move(out), inv};
    }

    case MoveKind::R2Insert: {
        if (m.index < 0 || m.index > n) move_fail(m, "index out of range");
        const auto levels = typecheck(d);
        const int width = static_cast<int>(levels[static_cast<std::size_t>(m.index)].size());
        if (m.offset < 0 || m.offset + 2 > width)
            move_fail(m, "wire offset out of range");
        const Slice first = m.pos_first ? braid_pos(m.offset) : braid_neg(m.offset);
        const Slice second = m.pos_first ? braid_neg(m.offset) : braid_pos(m.offset);
        out.slices.insert(out.slices.begin() + m.index, {first, second});
        Move inv;
        inv.kind = MoveKind::R2Cancel;
        inv.index = m.index;
        return {std::move(out), inv};
    }

    case MoveKind::PullThrough: {
        if (m.index < 0 || m.index >= n) move_fail(m, "index out of range");
        const Slice g = out.slices[static_cast<std::size_t>(m.index)];
        const auto [gm, gn] = slice_arity(g, sig);
        if (gm == 0 && gn == 0) move_fail(m, "generator touches no wires");
        // Pattern blocks around the generator in the source form.
        const int src_braids = m.down ? gn : gm;
        const int dst_braids = m.down ? gm : gn;
        const int first = m.down ? m.index + 1 : m.index - src_braids;
        const int block_start = m.down ? m.index : m.index - src_braids;
        if (block_start < 0 || block_start + src_braids + 1 > n)
            move_fail(m, "pattern does not fit the slice list");

        // The generator's offset in the crossings-above (upper) form.
        const int p = m.down ? g.offset : (m.left ? g.offset + 1 : g.offset - 1);
        if (p < 0 || (m.left && p < 1)) move_fail(m, "no wire on that side");

        // Expected source crossing offsets.
        std::optional<SliceKind> sign_kind;
        for (int t = 0; t < src_braids; ++t) {
            const Slice& s = out.slices[static_cast<std::size_t>(first + t)];
            int want = 0;
            if (m.down)
                want = m.left ? (t == 0 ? p - 1 : p + t - 1) : p + gn - 1 - t;
            else
                want = m.left ? p - 1 + t : p + gm - 1 - t;
            if (!is_braid(s.kind) || s.offset != want)
                move_fail(m, "crossing pattern mismatch");
            if (sign_kind && *sign_kind != s.kind)
                move_fail(m, "crossing signs disagree");
            sign_kind = s.kind;
        }
        if (!sign_kind)
            sign_kind = m.positive ? SliceKind::BraidPos : SliceKind::BraidNeg;

        // Width check for expanding patterns that add crossings on the
        // right or reach one wire further left.
        if (src_braids == 0 && dst_braids > 0) {
            const auto levels = typecheck(d);
            const int width =
                static_cast<int>(levels[static_cast<std::size_t>(m.index)].size());
            if (m.down) {
                if (!m.left && p + gm + 1 > width) move_fail(m, "no wire to pull");
            } else {
                if (m.left && g.offset + 1 > width) move_fail(m, "no wire to pull");
            }
        }

        // Build the replacement block.
        std::vector<Slice> block;
        block.reserve(static_cast<std::size_t>(dst_braids) + 1);
        const auto braid_at = [&](int off) { return Slice{*sign_kind, off, -1}; };
        Slice g2 = g;
        if (m.down) {
            g2.offset = m.left ? p - 1 : p + 1;
            for (int t = 0; t < dst_braids; ++t)
                block.push_back(braid_at(m.left ? p - 1 + t : p + gm - 1 - t));
            block.push_back(g2);
        } else {
            g2.offset = p;
            block.push_back(g2);
            for (int t = 0; t < dst_braids; ++t)
                block.push_back(braid_at(m.left ? (t == 0 ? p - 1 : p + t - 1)
                                                : p + gn - 1 - t));
        }
        out.slices.erase(out.slices.begin() + block_start,
                         out.slices.begin() + block_start + src_braids + 1);
        out.slices.insert(out.slices.begin() + block_start, block.begin(), block.end());

        Move inv = m;
        inv.down = !m.down;
        inv.index = m.down ? m.index + gm : m.index - gm;
        inv.positive = *sign_kind == SliceKind::BraidPos;
        return {std::move(out), inv};
    }
    }
    move_fail(m, "unknown move kind");
}

// Enumerates every move applicable to d whose result stays within
// max_slices slices.  Deterministic order.
[[nodiscard]] inline std::vector<Move> applicable_moves(const Diagram& d, int max_slices) {
    const auto& sig = *d.signature;
    const auto levels = typecheck(d);
    const int n = static_cast<int>(d.slices.size());
    std::vector<Move> out;

    const auto try_pull = [&](Move m) {
        const Slice& g = d.slices[static_cast<std::size_t>(m.index)];
        const auto [gm, gn] = slice_arity(g, sig);
        const int growth = m.down ? gm - gn : gn - gm;
        if (n + growth > max_slices) return;
        const int src = m.down ? gn : gm;
        if (src == 0) {
            for (bool pos : {false, true}) {
                m.positive = pos;
                try {
                    (void)apply_move(d, m);
                    out.push_back(m);
                } catch (const InvalidMoveError&) {}
            }
        } else {
            try {
                (void)apply_move(d, m);
                out.push_back(m);
            } catch (const InvalidMoveError&) {}
        }
    };

    for (int i = 0; i < n; ++i) {
        if (i + 1 < n) {
            const auto fit = detail::exchange_fit(d.slices[static_cast<std::size_t>(i)],
                                                  d.slices[static_cast<std::size_t>(i) + 1],
                                                  sig);
            if (fit.right) out.push_back({MoveKind::Exchange, i});
            if (fit.left) out.push_back({MoveKind::Exchange, i, 0, false, false, true});
            const Slice& a = d.slices[static_cast<std::size_t>(i)];
            const Slice& b = d.slices[static_cast<std::size_t>(i) + 1];
            if (is_braid(a.kind) && is_braid(b.kind) && a.offset == b.offset &&
                a.kind != b.kind)
                out.push_back({MoveKind::R2Cancel, i});
        }
        for (bool down : {true, false})
            for (bool left : {false, true}) {
                Move m;
                m.kind = MoveKind::PullThrough;
                m.index = i;
                m.down = down;
                m.left = left;
                try_pull(m);
            }
    }

    if (n + 2 <= max_slices) {
        for (int lvl = 0; lvl <= n; ++lvl) {
            const int width = static_cast<int>(levels[static_cast<std::size_t>(lvl)].size());
            for (int off = 0; off + 2 <= width; ++off)
                for (bool pos_first : {false, true}) {
                    Move m;
                    m.kind = MoveKind::R2Insert;
                    m.index = lvl;
                    m.offset = off;
                    m.pos_first = pos_first;
                    out.push_back(m);
                }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Canonical form

// Sorts slices by repeated exchanges toward the lexicographically least
// sequence of (offset, kind, generator) keys, preferring the right-hand
// adjustment.  Deterministic; every applied exchange is recorded.
[[nodiscard]] inline std::pair<Diagram, std::vector<Move>> canonicalize(const Diagram& d) {
    const auto& sig = *d.signature;
    const auto key = [&](const Slice& s) {
        return std::tuple(s.offset, static_cast<int>(s.kind), s.named_id);
    };
    Diagram cur = d;
    std::vector<Move> moves;
    const int n = static_cast<int>(cur.slices.size());
    const long safety = 64 + 4L * n * n * (n + 1);
    long sweeps = 0;
    bool changed = true;
    while (changed) {
        if (++sweeps > safety) throw DiagramError("canonical form failed to stabilize");
        changed = false;
        for (int i = 0; i + 1 < n; ++i) {
            const Slice& u = cur.slices[static_cast<std::size_t>(i)];
            const Slice& l = cur.slices[static_cast<std::size_t>(i) + 1];
            const auto fit = detail::exchange_fit(u, l, sig);
            Move m{MoveKind::Exchange, i};
            if (fit.right) {
                const auto [mu, nu] = slice_arity(u, sig);
                Slice moved = l;
                moved.offset += mu - nu;
                if (key(moved) < key(u)) {
                    auto [next, inv] = apply_move(cur, m);
                    (void)inv;
                    cur = std::move(next);
                    moves.push_back(m);
                    changed = true;
                    continue;
                }
            }
            if (fit.left && key(l) < key(u)) {
                m.left = true;
                auto [next, inv] = apply_move(cur, m);
                (void)inv;
                cur = std::move(next);
                moves.push_back(m);
                changed = true;
            }
        }
    }
    return {std::move(cur), std::move(moves)};
}

// ---------------------------------------------------------------------------
// Bounded bidirectional equality search

enum class Verdict : std::uint8_t { Equal, Unknown };

struct SearchResult {
    Verdict verdict = Verdict::Unknown;
    std::vector<Move> path;  // replays lhs into rhs exactly when Equal
    std::size_t states_visited = 0;
    std::size_t max_frontier = 0;
    double wall_seconds = 0.0;
};

struct SearchLimits {
    std::size_t max_states = 1'000'000;
    int max_slices = -1;  // -1: larger input size + 8
};

namespace detail {

[[nodiscard]] inline std::string state_key(const Diagram& d) {
    std::string k;
    k.reserve(d.slices.size() * 5);
    for (const auto& s : d.slices) {
        k.push_back(static_cast<char>(s.kind));
        k.append(reinterpret_cast<const char*>(&s.offset), sizeof(s.offset));
        if (s.kind == SliceKind::Named) {
            const auto id16 = static_cast<std::uint16_t>(s.named_id);
            k.append(reinterpret_cast<const char*>(&id16), sizeof(id16));
        }
    }
    return k;
}

[[nodiscard]] inline Move invert_exchange(const Move& m) {
    Move inv = m;
    inv.left = !m.left;
    return inv;
}

struct SearchNode {
    Diagram diagram;
    std::string parent;       // empty for the root
    std::vector<Move> fwd;    // parent state -> this state
    std::vector<Move> rev;    // this state -> parent state
};

using SearchSide = std::unordered_map<std::string, SearchNode>;

// Chain of forward moves from the side's root to the given state.
[[nodiscard]] inline std::vector<Move> chain_from_root(const SearchSide& side,
                                                       const std::string& at) {
    std::vector<std::vector<Move>> hops;
    std::string cur = at;
    while (true) {
        const auto& node = side.at(cur);
        hops.push_back(node.fwd);
        if (node.parent.empty()) break;
        cur = node.parent;
    }
    std::vector<Move> out;
    for (auto it = hops.rbegin(); it != hops.rend(); ++it)
        out.insert(out.end(), it->begin(), it->end());
    return out;
}

// Chain of reverse moves from the given state back to the side's root.
[[nodiscard]] inline std::vector<Move> chain_to_root(const SearchSide& side,
                                                     const std::string& at) {
    std::vector<Move> out;
    std::string cur = at;
    while (true) {
        const auto& node = side.at(cur);
        out.insert(out.end(), node.rev.begin(), node.rev.end());
        if (node.parent.empty()) break;
        cur = node.parent;
    }
    return out;
}

}  // namespace detail

// Searches for a move path proving lhs equal to rhs as morphisms, by
// bidirectional breadth-first search over canonical forms.  Returns Equal
// with a replayable path, or Unknown when the budget is exhausted; equal
// inputs yield Equal with an empty path.  Throws SignatureMismatchError
// when the diagrams do not share signature and boundary.
[[nodiscard]] inline SearchResult equiv_search(const Diagram& lhs, const Diagram& rhs,
                                               const SearchLimits& limits = {}) {
    const auto start_time = std::chrono::steady_clock::now();
    const auto finish = [&](SearchResult r) {
        r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                       start_time)
                             .count();
        return r;
    };

    if (!(*lhs.signature == *rhs.signature))
        throw SignatureMismatchError("diagrams use different signatures");
    if (lhs.domain != rhs.domain || codomain(lhs) != codomain(rhs))
        throw SignatureMismatchError("diagrams have different boundaries");

    SearchResult result;
    if (lhs == rhs) {
        result.verdict = Verdict::Equal;
        return finish(result);
    }

    // Cheap invariant screen: the moves preserve these, so a mismatch
    // means no path exists and the search would only burn the budget.
    if (!has_named_slice(lhs) && !has_named_slice(rhs)) {
        if (writhe(lhs) != writhe(rhs) || turning_number(lhs) != turning_number(rhs))
            return finish(result);
    }

    const int max_slices =
        limits.max_slices >= 0
            ? limits.max_slices
            : static_cast<int>(std::max(lhs.slices.size(), rhs.slices.size())) + 8;

    auto [cl, pre_l] = canonicalize(lhs);
    auto [cr, pre_r] = canonicalize(rhs);
    const std::string kl = detail::state_key(cl);
    const std::string kr = detail::state_key(cr);

    detail::SearchSide sides[2];
    std::deque<std::string> frontier[2];
    sides[0].emplace(kl, detail::SearchNode{std::move(cl), "", {}, {}});
    sides[1].emplace(kr, detail::SearchNode{std::move(cr), "", {}, {}});
    frontier[0].push_back(kl);
    frontier[1].push_back(kr);

    const auto build_path = [&](const std::string& meet) {
        std::vector<Move> path = pre_l;
        const auto down = detail::chain_from_root(sides[0], meet);
        path.insert(path.end(), down.begin(), down.end());
        const auto up = detail::chain_to_root(sides[1], meet);
        path.insert(path.end(), up.begin(), up.end());
        for (auto it = pre_r.rbegin(); it != pre_r.rend(); ++it)
            path.push_back(detail::invert_exchange(*it));
        return path;
    };

    if (kl == kr) {
        result.verdict = Verdict::Equal;
        result.path = build_path(kl);
        result.states_visited = 2;
        return finish(result);
    }

    result.states_visited = 2;
    while (!frontier[0].empty() && !frontier[1].empty()) {
        result.max_frontier =
            std::max(result.max_frontier,
                     std::max(frontier[0].size(), frontier[1].size()));
        if (sides[0].size() + sides[1].size() >= limits.max_states) break;

        const int side = frontier[0].size() <= frontier[1].size() ? 0 : 1;
        const std::string cur_key = frontier[side].front();
        frontier[side].pop_front();
        const Diagram cur = sides[side].at(cur_key).diagram;

        for (const Move& m : applicable_moves(cur, max_slices)) {
            auto [raw, inv] = apply_move(cur, m);
            auto [canon, cmoves] = canonicalize(raw);
            std::string key = detail::state_key(canon);
            if (sides[side].contains(key)) continue;

            detail::SearchNode node;
            node.diagram = std::move(canon);
            node.parent = cur_key;
            node.fwd.push_back(m);
            node.fwd.insert(node.fwd.end(), cmoves.begin(), cmoves.end());
            for (auto it = cmoves.rbegin(); it != cmoves.rend(); ++it)
                node.rev.push_back(detail::invert_exchange(*it));
            node.rev.push_back(inv);
            sides[side].emplace(key, std::move(node));
            frontier[side].push_back(key);
            ++result.states_visited;

            if (sides[1 - side].contains(key)) {
                result.verdict = Verdict::Equal;
                result.path = build_path(key);
                return finish(result);
            }
            if (sides[0].size() + sides[1].size() >= limits.max_states) break;
        }
    }
    return finish(result);
}

// ---------------------------------------------------------------------------
// Bridge-position normalization

// Rewrites a closed cap/cup diagram so that every cap precedes every cup,
// using only exchanges and pull-throughs.  Returns the normalized diagram
// and the move list replaying the rewrite.
[[nodiscard]] inline std::pair<Diagram, std::vector<Move>> bridge_normalize(const Diagram& d) {
    if (has_named_slice(d))
        throw PrecondViolation("bridge normalization needs a cap/cup diagram");
    if (!is_closed(d))
        throw PrecondViolation("bridge normalization needs a closed diagram");

    Diagram cur = d;
    std::vector<Move> moves;
    const auto step = [&](const Move& m) {
        auto [next, inv] = apply_move(cur, m);
        (void)inv;
        cur = std::move(next);
        moves.push_back(m);
    };

    long safety = 1'000'000;
    // Phase 1: float caps to a leading prefix.
    while (true) {
        if (--safety < 0) throw DiagramError("bridge normalization failed to stabilize");
        const int n = static_cast<int>(cur.slices.size());
        int prefix = 0;
        while (prefix < n && is_cap(cur.slices[static_cast<std::size_t>(prefix)].kind))
            ++prefix;
        int capi = -1;
        for (int i = prefix; i < n; ++i)
            if (is_cap(cur.slices[static_cast<std::size_t>(i)].kind)) { capi = i; break; }
        if (capi < 0) break;

        const Slice above = cur.slices[static_cast<std::size_t>(capi) - 1];
        const Slice cap = cur.slices[static_cast<std::size_t>(capi)];
        if (is_braid(above.kind) && cap.offset == above.offset + 1) {
            // The crossing straddles the cap's landing spot: grow the cap
            // one step to the left, through the crossing.
            Move pull;
            pull.kind = MoveKind::PullThrough;
            pull.index = capi;
            pull.down = false;
            pull.left = false;
            pull.positive = above.kind == SliceKind::BraidPos;
            step(pull);
            step({MoveKind::Exchange, capi - 1, 0, false, false, true});
        } else {
            const auto fit = detail::exchange_fit(above, cap, *cur.signature);
            Move m{MoveKind::Exchange, capi - 1};
            m.left = !fit.right;
            step(m);
        }
    }

    // Phase 2: sink cups to a trailing suffix.
    while (true) {
        if (--safety < 0) throw DiagramError("bridge normalization failed to stabilize");
        const int n = static_cast<int>(cur.slices.size());
        int suffix = 0;
        while (suffix < n &&
               is_cup(cur.slices[static_cast<std::size_t>(n - 1 - suffix)].kind))
            ++suffix;
        int cupi = -1;
        for (int i = n - 1 - suffix; i >= 0; --i)
            if (is_cup(cur.slices[static_cast<std::size_t>(i)].kind)) { cupi = i; break; }
        if (cupi < 0) break;

        const Slice cup = cur.slices[static_cast<std::size_t>(cupi)];
        const Slice below = cur.slices[static_cast<std::size_t>(cupi) + 1];
        if (is_braid(below.kind) && below.offset == cup.offset - 1) {
            // Mirror jump: grow the cup one step to the right, through the
            // crossing below it.
            Move pull;
            pull.kind = MoveKind::PullThrough;
            pull.index = cupi;
            pull.down = true;
            pull.left = false;
            pull.positive = below.kind == SliceKind::BraidPos;
            step(pull);
            step({MoveKind::Exchange, cupi + 2, 0, false, false, true});
        } else {
            const auto fit = detail::exchange_fit(cup, below, *cur.signature);
            Move m{MoveKind::Exchange, cupi};
            m.left = !fit.right;
            step(m);
        }
    }
    return {std::move(cur), std::move(moves)};
}

}  // namespace braidword
