#pragma once

// Kauffman-style state sum on closed cap/cup diagrams, and the writhe
// normalization that turns it into an ambient-isotopy invariant taking the
// value 1 on every unknot diagram.

#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "core.hpp"
#include "invariants.hpp"

namespace braidword {

// Integer Laurent polynomials in one variable A.
class LaurentPoly {
public:
    LaurentPoly() = default;

    [[nodiscard]] static LaurentPoly zero() { return {}; }
    [[nodiscard]] static LaurentPoly one() { return monomial(0, 1); }
    [[nodiscard]] static LaurentPoly monomial(int exp, long long coeff) {
        LaurentPoly p;
        p.add_term(exp, coeff);
        return p;
    }

    void add_term(int exp, long long coeff) {
        if (coeff == 0) return;
        const auto [it, inserted] = terms_.try_emplace(exp, coeff);
        if (!inserted && (it->second += coeff) == 0) terms_.erase(it);
    }

    [[nodiscard]] const std::map<int, long long>& terms() const noexcept { return terms_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] bool is_one() const noexcept {
        return terms_.size() == 1 && terms_.begin()->first == 0 &&
               terms_.begin()->second == 1;
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly out = a;
        for (const auto& [e, c] : b.terms_) out.add_term(e, c);
        return out;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly out;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
        return out;
    }

    // Multiplies by coeff * A^exp.
    [[nodiscard]] LaurentPoly scaled(int exp, long long coeff) const {
        LaurentPoly out;
        for (const auto& [e, c] : terms_) out.add_term(e + exp, c * coeff);
        return out;
    }

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    [[nodiscard]] std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [e, c] : terms_) {
            if (out.empty())
                out += c < 0 ? "-" : "";
            else
                out += c < 0 ? " - " : " + ";
            const long long mag = c < 0 ? -c : c;
            if (mag != 1 || e == 0) out += std::to_string(mag);
            if (e != 0) {
                if (mag != 1) out += "*";
                out += "A^" + std::to_string(e);
            }
        }
        return out;
    }

private:
    std::map<int, long long> terms_;  // exponent -> nonzero coefficient
};

namespace detail {

struct UnionFind {
    std::vector<int> parent;

    int make() {
        parent.push_back(static_cast<int>(parent.size()));
        return parent.back();
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

}  // namespace detail

// Kauffman bracket of a closed diagram.  Each crossing is resolved both
// ways (straight-through or cap/cup) with weights A and 1/A chosen by the
// crossing sign; each state contributes its weight times (-A^2 - A^-2) per
// closed loop beyond the first.  The bracket of the empty diagram is 1.
[[nodiscard]] inline LaurentPoly kauffman_bracket(const Diagram& d,
                                                  int crossing_limit = 20) {
    if (has_named_slice(d))
        throw PrecondViolation("state sum requires a cap/cup diagram");
    if (!is_closed(d)) throw PrecondViolation("state sum requires a closed diagram");

    std::vector<std::size_t> crossings;
    for (std::size_t i = 0; i < d.slices.size(); ++i)
        if (is_braid(d.slices[i].kind)) crossings.push_back(i);
    const int c = static_cast<int>(crossings.size());
    if (c > crossing_limit)
        throw TooManyCrossingsError("state sum over " + std::to_string(c) +
                                    " crossings exceeds the limit of " +
                                    std::to_string(crossing_limit));

    // Loop weight delta = -A^2 - A^-2; powers cached up to the loop maximum.
    const LaurentPoly delta = LaurentPoly::monomial(2, -1) + LaurentPoly::monomial(-2, -1);
    std::vector<LaurentPoly> delta_pow{LaurentPoly::one()};

    LaurentPoly bracket;
    std::vector<int> wire;  // loop id per wire at the current level
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << c); ++mask) {
        detail::UnionFind uf;
        wire.clear();
        int exponent = 0;
        std::size_t cross_no = 0;
        for (const auto& s : d.slices) {
            const auto at = wire.begin() + s.offset;
            switch (s.kind) {
            case SliceKind::CapR:
            case SliceKind::CapL: {
                const int id = uf.make();
                wire.insert(at, {id, id});
                break;
            }
            case SliceKind::CupR:
            case SliceKind::CupL:
                uf.unite(at[0], at[1]);
                wire.erase(at, at + 2);
                break;
            case SliceKind::BraidPos:
            case SliceKind::BraidNeg: {
                const int sign = crossing_sign(s.kind);
                const bool smooth = (mask >> cross_no++) & 1u;
                if (smooth) {
                    // Replace the crossing by a cup over a cap.
                    exponent -= sign;
                    uf.unite(at[0], at[1]);
                    const int id = uf.make();
                    at[0] = id;
                    at[1] = id;
                } else {
                    // Straight-through resolution: wires keep their loops.
                    exponent += sign;
                }
                break;
            }
            case SliceKind::Named:
                break;  // unreachable, rejected above
            }
        }
        int loops = 0;
        for (int id = 0; id < static_cast<int>(uf.parent.size()); ++id)
            loops += uf.find(id) == id ? 1 : 0;
        const int power = loops > 0 ? loops - 1 : 0;
        while (static_cast<int>(delta_pow.size()) <= power)
            delta_pow.push_back(delta_pow.back() * delta);
        bracket = bracket + delta_pow[static_cast<std::size_t>(power)].scaled(exponent, 1);
    }
    return bracket;
}

// Bracket rescaled by (-A^3)^(-writhe); equal to 1 on every diagram of the
// unknot and unchanged by all the rewrite moves.
[[nodiscard]] inline LaurentPoly normalized_invariant(const Diagram& d,
                                                      int crossing_limit = 20) {
    const LaurentPoly b = kauffman_bracket(d, crossing_limit);
    const long long w = writhe(d);
    const long long sign = (w % 2 == 0) ? 1 : -1;
    return b.scaled(static_cast<int>(-3 * w), sign);
}

}  // namespace braidword
