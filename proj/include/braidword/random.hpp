#pragma once

// Seeded random generation: closed cap/cup diagrams grown by a top-down
// walk that always keeps enough slice budget to close every open wire, a
// retry wrapper for single-component diagrams, and a uniform sampler over
// applicable rewrite moves.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "core.hpp"
#include "rewrite.hpp"
#include "strands.hpp"

namespace braidword {

using Rng = std::mt19937_64;

[[nodiscard]] inline Diagram random_closed_diagram(Rng& rng, int max_slices) {
    if (max_slices < 2)
        throw PrecondViolation("need a budget of at least two slices to close");
    const auto pick = [&rng](std::size_t n) {
        return static_cast<std::size_t>(rng() % n);
    };

    Diagram d;
    ObjectWord w;
    while (true) {
        const int width = static_cast<int>(w.size());
        const int used = static_cast<int>(d.slices.size());
        if (width == 0 && used > 0) break;

        // Budget invariant: used + width/2 <= max_slices, so a death is
        // always affordable and the walk always closes in time.  The wire
        // word keeps equal up/down counts, so some adjacent pair can die.
        enum class Choice { Cap, Braid, Cup };
        Choice choice = Choice::Cap;
        if (width > 0) {
            const int wc = used + 1 + (width + 2) / 2 <= max_slices ? 3 : 0;
            const int wb = used + 1 + width / 2 <= max_slices ? 4 : 0;
            const int r = static_cast<int>(pick(static_cast<std::size_t>(wc + wb + 3)));
            choice = r < wc ? Choice::Cap : (r < wc + wb ? Choice::Braid : Choice::Cup);
        }

        switch (choice) {
        case Choice::Cap: {
            const int off = static_cast<int>(pick(static_cast<std::size_t>(width) + 1));
            d.slices.push_back(pick(2) ? cap_l(off) : cap_r(off));
            break;
        }
        case Choice::Braid: {
            const int off = static_cast<int>(pick(static_cast<std::size_t>(width) - 1));
            d.slices.push_back(pick(2) ? braid_neg(off) : braid_pos(off));
            break;
        }
        case Choice::Cup: {
            std::vector<Slice> deaths;
            for (int i = 0; i + 1 < width; ++i) {
                const Label a = w[static_cast<std::size_t>(i)];
                const Label b = w[static_cast<std::size_t>(i) + 1];
                if (a == label_down && b == label_up) deaths.push_back(cup_r(i));
                if (a == label_up && b == label_down) deaths.push_back(cup_l(i));
            }
            d.slices.push_back(deaths[pick(deaths.size())]);
            break;
        }
        }
        detail::apply_slice(w, d.slices.back(), *d.signature, d.slices.size() - 1);
    }
    return d;
}

struct RandomDiagramOptions {
    int max_slices = 14;
    int max_attempts = 1000;
};

// Retries random_closed_diagram until the result is a single closed loop.
[[nodiscard]] inline Diagram random_knot(Rng& rng, const RandomDiagramOptions& opt = {}) {
    for (int i = 0; i < opt.max_attempts; ++i) {
        Diagram d = random_closed_diagram(rng, opt.max_slices);
        if (is_knot(d)) return d;
    }
    throw DiagramError("no single-component diagram found within the attempt budget");
}

// Uniform choice among the moves applicable within max_slices, if any.
[[nodiscard]] inline std::optional<Move> random_move(Rng& rng, const Diagram& d,
                                                     int max_slices) {
    const auto moves = applicable_moves(d, max_slices);
    if (moves.empty()) return std::nullopt;
    return moves[static_cast<std::size_t>(rng() % moves.size())];
}

}  // namespace braidword
