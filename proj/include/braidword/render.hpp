#pragma once

// Plain-text rendering of diagrams, one row per level word and one row per
// slice.  Wire i sits at text column 2*i.  Level rows show wire labels
// ("^", "v", or the first letter of a named object).  Slice rows show "|"
// for untouched wires, "/ \" for a birth, "\ /" for a death, "X" for a
// positive crossing, "x" for a negative one, and "[name]" for a named
// generator spanning its wires.

#include <algorithm>
#include <string>
#include <vector>

#include "core.hpp"

namespace braidword {

namespace detail {

inline void put_at(std::string& row, std::size_t col, char c) {
    if (row.size() <= col) row.resize(col + 1, ' ');
    row[col] = c;
}

inline void put_text(std::string& row, std::size_t col, const std::string& text) {
    for (std::size_t i = 0; i < text.size(); ++i) put_at(row, col + i, text[i]);
}

[[nodiscard]] inline char label_char(Label l, const Signature& sig) {
    if (l == label_up) return '^';
    if (l == label_down) return 'v';
    const std::string name = sig.object_name(l);
    return name.empty() ? '?' : name.front();
}

}  // namespace detail

[[nodiscard]] inline std::string render(const Diagram& d) {
    const auto levels = typecheck(d);
    const auto& sig = *d.signature;
    std::vector<std::string> rows;

    const auto level_row = [&](const ObjectWord& w) {
        if (w.empty()) return;
        std::string row;
        for (std::size_t i = 0; i < w.size(); ++i)
            detail::put_at(row, 2 * i, detail::label_char(w[i], sig));
        rows.push_back(std::move(row));
    };

    for (std::size_t si = 0; si < d.slices.size(); ++si) {
        level_row(levels[si]);
        const Slice& s = d.slices[si];
        const auto [m, n] = slice_arity(s, sig);
        const auto k = static_cast<std::size_t>(s.offset);
        // Rows for width-growing slices use the wider lower level's wire
        // positions; shrinking slices use the upper level's.
        const bool lower_coords = n >= m;
        std::string row;
        for (std::size_t j = 0; j < k; ++j) detail::put_at(row, 2 * j, '|');
        switch (s.kind) {
        case SliceKind::CapR:
        case SliceKind::CapL:
            detail::put_at(row, 2 * k, '/');
            detail::put_at(row, 2 * k + 2, '\\');
            break;
        case SliceKind::CupR:
        case SliceKind::CupL:
            detail::put_at(row, 2 * k, '\\');
            detail::put_at(row, 2 * k + 2, '/');
            break;
        case SliceKind::BraidPos:
            detail::put_at(row, 2 * k + 1, 'X');
            break;
        case SliceKind::BraidNeg:
            detail::put_at(row, 2 * k + 1, 'x');
            break;
        case SliceKind::Named: {
            const auto& g = sig.generators[static_cast<std::size_t>(s.named_id)];
            const int span = std::max(lower_coords ? n : m, 1);
            std::string box = "[" + g.name + "]";
            const auto width = static_cast<std::size_t>(2 * span - 1);
            if (box.size() > width && width >= 2) {
                box.resize(width - 1);
                box += "]";
            }
            detail::put_text(row, 2 * k, box);
            break;
        }
        }
        const std::size_t upper = levels[si].size();
        for (std::size_t j = k + static_cast<std::size_t>(m); j < upper; ++j) {
            const std::size_t col =
                lower_coords ? 2 * (j + static_cast<std::size_t>(n - m)) : 2 * j;
            detail::put_at(row, col, '|');
        }
        rows.push_back(std::move(row));
    }
    level_row(levels.back());

    std::string out;
    for (auto& row : rows) {
        while (!row.empty() && row.back() == ' ') row.pop_back();
        out += row;
        out += '\n';
    }
    return out;
}

}  // namespace braidword
