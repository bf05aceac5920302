#pragma once

// Braid words and the word problem for braid groups: extraction of a braid
// word from a crossings-only diagram, Dehornoy handle reduction as the
// decision procedure, and a bounded breadth-first rewriting oracle used to
// cross-check it.

#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "core.hpp"

namespace braidword {

// A word in the braid group on `strands` strands.  Letter +k is the
// positive crossing of strands k and k+1 (1-based), letter -k its inverse.
struct BraidWord {
    int strands = 2;
    std::vector<int> letters;

    friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

inline constexpr long default_fuse = 10'000'000;

inline void validate_braid(const BraidWord& w) {
    if (w.strands < 1) throw PrecondViolation("braid needs at least one strand");
    for (int t : w.letters)
        if (t == 0 || std::abs(t) >= w.strands)
            throw PrecondViolation("braid letter " + std::to_string(t) +
                                   " out of range for " + std::to_string(w.strands) +
                                   " strands");
}

[[nodiscard]] inline BraidWord inverse(const BraidWord& w) {
    BraidWord r{w.strands, {}};
    r.letters.reserve(w.letters.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        r.letters.push_back(-*it);
    return r;
}

[[nodiscard]] inline BraidWord concat(const BraidWord& u, const BraidWord& v) {
    if (u.strands != v.strands)
        throw StrandMismatchError("cannot compose braids on " +
                                  std::to_string(u.strands) + " and " +
                                  std::to_string(v.strands) + " strands");
    BraidWord r = u;
    r.letters.insert(r.letters.end(), v.letters.begin(), v.letters.end());
    return r;
}

// Reads a braid word off a crossings-only diagram whose domain wires all
// carry one label; crossing at offset k becomes letter ±(k+1).
[[nodiscard]] inline BraidWord braid_from_diagram(const Diagram& d) {
    for (const auto& s : d.slices)
        if (!is_braid(s.kind))
            throw NotPureBraidError(std::string("slice kind ") + kind_name(s.kind) +
                                    " is not a crossing");
    for (const Label l : d.domain)
        if (l != d.domain.front())
            throw NotPureBraidError("domain wires carry mixed labels");
    (void)typecheck(d);
    BraidWord w{static_cast<int>(d.domain.size()), {}};
    w.letters.reserve(d.slices.size());
    for (const auto& s : d.slices)
        w.letters.push_back(crossing_sign(s.kind) * (s.offset + 1));
    return w;
}

namespace detail {

// Position of the leftmost-innermost handle: the earliest closing letter
// whose nearest preceding letter of index <= its own has equal index and
// opposite sign.  Returns {open, close}, or {-1, -1} when reduced.
[[nodiscard]] inline std::pair<int, int> find_handle(const std::vector<int>& w) {
    const int n = static_cast<int>(w.size());
    for (int b = 0; b < n; ++b) {
        const int i = std::abs(w[static_cast<std::size_t>(b)]);
        for (int a = b - 1; a >= 0; --a) {
            const int j = std::abs(w[static_cast<std::size_t>(a)]);
            if (j > i) continue;
            if (j == i && w[static_cast<std::size_t>(a)] ==
                              -w[static_cast<std::size_t>(b)])
                return {a, b};
            break;
        }
    }
    return {-1, -1};
}

}  // namespace detail

// Dehornoy handle reduction: repeatedly rewrites the leftmost-innermost
// handle s_i^e v s_i^-e, conjugating the index-(i+1) letters of v through
// s_(i+1).  The result is handle-free; it is empty exactly when the input
// represents the trivial braid.  Throws FuseExceededError past `fuse` steps.
[[nodiscard]] inline BraidWord handle_reduce(const BraidWord& w, long fuse = default_fuse) {
    validate_braid(w);
    std::vector<int> cur = w.letters;
    for (long step = 0;; ++step) {
        const auto [a, b] = detail::find_handle(cur);
        if (a < 0) break;
        if (step >= fuse)
            throw FuseExceededError("handle reduction exceeded " +
                                    std::to_string(fuse) + " steps");
        const int i = std::abs(cur[static_cast<std::size_t>(a)]);
        const int e = cur[static_cast<std::size_t>(a)] > 0 ? +1 : -1;
        std::vector<int> repl;
        repl.reserve(3 * static_cast<std::size_t>(b - a));
        for (int t = a + 1; t < b; ++t) {
            const int letter = cur[static_cast<std::size_t>(t)];
            if (std::abs(letter) == i + 1) {
                const int d = letter > 0 ? +1 : -1;
                repl.push_back(-e * (i + 1));
                repl.push_back(d * i);
                repl.push_back(e * (i + 1));
            } else {
                repl.push_back(letter);
            }
        }
        cur.erase(cur.begin() + a, cur.begin() + b + 1);
        cur.insert(cur.begin() + a, repl.begin(), repl.end());
    }
    return {w.strands, std::move(cur)};
}

[[nodiscard]] inline bool is_trivial_braid(const BraidWord& w, long fuse = default_fuse) {
    return handle_reduce(w, fuse).letters.empty();
}

// Decides equality of two braid words on the same strand count.
[[nodiscard]] inline bool braid_equal(const BraidWord& u, const BraidWord& v,
                                      long fuse = default_fuse) {
    return is_trivial_braid(concat(u, inverse(v)), fuse);
}

// ---------------------------------------------------------------------------
// Bounded rewriting oracle

namespace detail {

// Enumerates the one-step rewrites of a letter vector: deletion of an
// adjacent inverse pair, the braid relation on same-sign triples of
// adjacent index, commutation of distant letters, and (optionally)
// insertion of an inverse pair while staying within max_len letters.
template <typename Fn>
void for_each_braid_neighbor(const std::vector<int>& w, int strands, int max_len,
                             bool with_insertions, Fn&& fn) {
    const int n = static_cast<int>(w.size());
    for (int i = 0; i + 1 < n; ++i) {
        if (w[static_cast<std::size_t>(i)] == -w[static_cast<std::size_t>(i) + 1]) {
            auto v = w;
            v.erase(v.begin() + i, v.begin() + i + 2);
            fn(std::move(v));
        }
    }
    for (int i = 0; i + 2 < n; ++i) {
        const int a = w[static_cast<std::size_t>(i)];
        const int b = w[static_cast<std::size_t>(i) + 1];
        if (w[static_cast<std::size_t>(i) + 2] == a && (a > 0) == (b > 0) &&
            std::abs(std::abs(a) - std::abs(b)) == 1) {
            auto v = w;
            v[static_cast<std::size_t>(i)] = b;
            v[static_cast<std::size_t>(i) + 1] = a;
            v[static_cast<std::size_t>(i) + 2] = b;
            fn(std::move(v));
        }
    }
    for (int i = 0; i + 1 < n; ++i) {
        if (std::abs(std::abs(w[static_cast<std::size_t>(i)]) -
                     std::abs(w[static_cast<std::size_t>(i) + 1])) >= 2) {
            auto v = w;
            std::swap(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(i) + 1]);
            fn(std::move(v));
        }
    }
    if (with_insertions && n + 2 <= max_len) {
        for (int i = 0; i <= n; ++i)
            for (int g = 1; g < strands; ++g)
                for (const int s : {g, -g}) {
                    auto v = w;
                    v.insert(v.begin() + i, {s, -s});
                    fn(std::move(v));
                }
    }
}

[[nodiscard]] inline std::string braid_state_key(const std::vector<int>& w) {
    std::string k;
    k.reserve(w.size());
    for (const int t : w) k.push_back(static_cast<char>(t + 64));
    return k;
}

}  // namespace detail

enum class OracleVerdict : std::uint8_t { Equal, NotEqual, Unknown };

// Breadth-first search over braid-relation rewrites with intermediate words
// capped at max_len letters.  Equal is definite; NotEqual means the bounded
// rewrite class of u does not contain v; Unknown means an input already
// exceeds the bound.
[[nodiscard]] inline OracleVerdict bfs_oracle_equal(const BraidWord& u, const BraidWord& v,
                                                    int max_len) {
    if (u.strands != v.strands)
        throw StrandMismatchError("cannot compare braids on " +
                                  std::to_string(u.strands) + " and " +
                                  std::to_string(v.strands) + " strands");
    validate_braid(u);
    validate_braid(v);
    if (static_cast<int>(u.letters.size()) > max_len ||
        static_cast<int>(v.letters.size()) > max_len)
        return OracleVerdict::Unknown;
    if (u.letters == v.letters) return OracleVerdict::Equal;

    const std::string target = detail::braid_state_key(v.letters);
    std::unordered_set<std::string> seen{detail::braid_state_key(u.letters)};
    std::vector<std::vector<int>> frontier{u.letters};
    bool found = false;
    while (!frontier.empty() && !found) {
        std::vector<std::vector<int>> next;
        for (const auto& w : frontier) {
            detail::for_each_braid_neighbor(
                w, u.strands, max_len, true, [&](std::vector<int> nb) {
                    if (found) return;
                    std::string key = detail::braid_state_key(nb);
                    if (key == target) {
                        found = true;
                        return;
                    }
                    if (seen.insert(std::move(key)).second) next.push_back(std::move(nb));
                });
            if (found) break;
        }
        frontier = std::move(next);
    }
    return found ? OracleVerdict::Equal : OracleVerdict::NotEqual;
}

// ---------------------------------------------------------------------------
// Word syntax: "s1 s2 s1^-1" (whitespace-separated)

[[nodiscard]] inline BraidWord parse_braid_word(int strands, const std::string& text) {
    BraidWord w{strands, {}};
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos >= text.size()) break;
        std::size_t end = pos;
        while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end])))
            ++end;
        const std::string tok = text.substr(pos, end - pos);
        pos = end;

        std::string base = tok;
        int sign = +1;
        if (const auto caret = tok.find('^'); caret != std::string::npos) {
            base = tok.substr(0, caret);
            if (tok.substr(caret) != "^-1")
                throw ParseError("bad exponent in braid letter '" + tok + "'");
            sign = -1;
        }
        if (base.size() < 2 || base[0] != 's')
            throw ParseError("bad braid letter '" + tok + "', expected sK or sK^-1");
        int k = 0;
        for (std::size_t i = 1; i < base.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(base[i])))
                throw ParseError("bad braid letter '" + tok + "'");
            k = k * 10 + (base[i] - '0');
        }
        if (k < 1 || k >= strands)
            throw ParseError("braid letter '" + tok + "' out of range for " +
                             std::to_string(strands) + " strands");
        w.letters.push_back(sign * k);
    }
    return w;
}

[[nodiscard]] inline std::string braid_word_str(const BraidWord& w) {
    std::string out;
    for (const int t : w.letters) {
        if (!out.empty()) out.push_back(' ');
        out += "s" + std::to_string(std::abs(t));
        if (t < 0) out += "^-1";
    }
    return out;
}

}  // namespace braidword
