// End-to-end acceptance gate.  Each test case covers one numbered criterion,
// prints a single PASS/FAIL line with its runtime, and fails the build when
// any bundled check or time budget is missed.  Tolerances, seeds and budgets
// are pinned here so the gate is reproducible.

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <braidword/bracket.hpp>
#include <braidword/braid.hpp>
#include <braidword/construct.hpp>
#include <braidword/core.hpp>
#include <braidword/invariants.hpp>
#include <braidword/parse.hpp>
#include <braidword/random.hpp>
#include <braidword/rewrite.hpp>
#include <braidword/strands.hpp>

#include "b3_classes.hpp"

using namespace braidword;

namespace {

// --- one-line reporting ----------------------------------------------------

class Criterion {
public:
    Criterion(int id, std::string title, double limit_seconds)
        : id_(id),
          title_(std::move(title)),
          limit_(limit_seconds),
          start_(std::chrono::steady_clock::now()) {}

    void expect(bool cond) {
        ++checks_;
        if (!cond) ++failures_;
    }

    // Prints the verdict line (folding the time budget into it) and returns
    // the overall outcome for the surrounding CHECK.
    bool finish() {
        const double secs = std::chrono::duration<double>(
                                std::chrono::steady_clock::now() - start_)
                                .count();
        const bool in_time = secs < limit_;
        const bool ok = failures_ == 0 && in_time;
        char timing[64];
        std::snprintf(timing, sizeof timing, "%.2fs, limit %.0fs", secs, limit_);
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id_ << ": " << title_
                  << " [" << timing << "]";
        if (failures_ != 0)
            std::cout << " -- " << failures_ << " of " << checks_ << " checks failed";
        else if (!in_time)
            std::cout << " -- over time budget";
        std::cout << "\n";
        return ok;
    }

private:
    int id_;
    std::string title_;
    double limit_;
    long long checks_ = 0;
    long long failures_ = 0;
    std::chrono::steady_clock::time_point start_;
};

// --- shared helpers --------------------------------------------------------

Diagram closed(std::vector<Slice> slices) {
    Diagram d;
    d.slices = std::move(slices);
    return d;
}

Diagram replay(Diagram d, const std::vector<Move>& path) {
    for (const auto& m : path) d = apply_move(d, m).first;
    return d;
}

// The same turning points read while walking the strand the other way.
CapCupCycle reversed_cycle(const CapCupCycle& c) {
    std::vector<SliceKind> v(c.turns().rbegin(), c.turns().rend());
    return CapCupCycle(std::move(v));
}

// All cap-first alternating cap/cup sequences of the given even length.
std::vector<std::vector<SliceKind>> alternating_sequences(int length) {
    std::vector<std::vector<SliceKind>> out;
    out.reserve(std::size_t{1} << length);
    for (int mask = 0; mask < (1 << length); ++mask) {
        std::vector<SliceKind> seq(static_cast<std::size_t>(length));
        for (int k = 0; k < length; ++k) {
            const bool flip = (mask >> k) & 1;
            if (k % 2 == 0)
                seq[static_cast<std::size_t>(k)] = flip ? SliceKind::CapL : SliceKind::CapR;
            else
                seq[static_cast<std::size_t>(k)] = flip ? SliceKind::CupL : SliceKind::CupR;
        }
        out.push_back(std::move(seq));
    }
    return out;
}

struct Realization {
    CapCupCycle cycle;
    long long writhe = 0;
    Diagram d;
};

// Every valid (cycle, writhe) pair with |cycle| <= 6 and |writhe| <= 3,
// together with its canonical twisted realization.
const std::vector<Realization>& twisted_realizations() {
    static const std::vector<Realization> list = [] {
        std::vector<Realization> out;
        for (const int len : {2, 4, 6}) {
            for (const auto& seq : alternating_sequences(len)) {
                const CapCupCycle c(seq);
                const int t = c.turning_number();
                for (long long w = -3; w <= 3; ++w) {
                    if (((w + t / 2) % 2 + 2) % 2 != 1) continue;
                    out.push_back({c, w, realize_cycle_with_writhe(c, w)});
                }
            }
        }
        return out;
    }();
    return list;
}

// 500 pinned-seed random knots on at most 14 slices.
const std::vector<Diagram>& knot_corpus() {
    static const std::vector<Diagram> corpus = [] {
        Rng rng(0x5eed0005ULL);
        std::vector<Diagram> out;
        out.reserve(500);
        for (int i = 0; i < 500; ++i) out.push_back(random_knot(rng, {14, 1000}));
        return out;
    }();
    return corpus;
}

struct Snapshot {
    long long w = 0;
    int t = 0;
    int components = 0;
    std::string cycle;
    ObjectWord dom;
    ObjectWord cod;

    friend bool operator==(const Snapshot&, const Snapshot&) = default;
};

Snapshot snapshot(const Diagram& d) {
    Snapshot s;
    s.w = writhe(d);
    s.t = turning_number(d);
    s.components = is_closed(d) ? component_count(d) : -1;
    if (is_closed(d) && s.components == 1) s.cycle = cap_cup_cycle(d).str();
    s.dom = d.domain;
    s.cod = codomain(d);
    return s;
}

Diagram load_sample(const char* name) {
    return load_diagram(std::string(SAMPLES_DIR "/") + name);
}

}  // namespace

TEST_CASE("criterion 1: gadget writhe and turning contributions") {
    Criterion c(1, "the four single-strand gadgets contribute (w, t) = (+1,+2), (-1,-2), (+1,-2), (-1,+2)", 1.0);
    const struct {
        char name;
        long long w;
        int t;
    } table[] = {{'a', 1, 2}, {'b', -1, -2}, {'c', 1, -2}, {'d', -1, 2}};
    for (const bool down : {false, true}) {
        for (const auto& row : table) {
            const Diagram g = gadget(row.name, down);
            c.expect(writhe(g) == row.w);
            c.expect(turning_number(g) == row.t);
            c.expect(codomain(g) == g.domain);
        }
    }
    CHECK(c.finish());
}

TEST_CASE("criterion 2: golden sample invariants") {
    Criterion c(2, "bundled sample diagrams carry the expected cap/cup cycles and writhe", 1.0);

    const Diagram rotang = load_sample("example_knot_rotang.bmc");
    const CapCupCycle rot_expected({SliceKind::CapL, SliceKind::CupR, SliceKind::CapR,
                                    SliceKind::CupL});
    const CapCupCycle rot_cycle = cap_cup_cycle(rotang);
    c.expect(rot_cycle == rot_expected || rot_cycle == reversed_cycle(rot_expected));

    const Diagram wp = load_sample("whole_process_knot.bmc");
    const CapCupCycle wp_expected({SliceKind::CapL, SliceKind::CupL, SliceKind::CapR,
                                   SliceKind::CupL, SliceKind::CapR, SliceKind::CupR});
    const CapCupCycle wp_cycle = cap_cup_cycle(wp);
    c.expect(wp_cycle == wp_expected || wp_cycle == reversed_cycle(wp_expected));
    c.expect(writhe(wp) == 2);

    CHECK(c.finish());
}

TEST_CASE("criterion 3: straight-strand writhe/turning synthesis is exact") {
    Criterion c(3, "writhe_turning_straight hits every (w, t) with |w|<=6, |t|<=12, 4 | 2w+t", 5.0);
    int built = 0;
    for (long long w = -6; w <= 6; ++w) {
        for (int t = -12; t <= 12; ++t) {
            if (((2 * w + t) % 4 + 4) % 4 != 0) continue;
            for (const bool down : {false, true}) {
                const Diagram d = writhe_turning_straight(w, t, down);
                c.expect(codomain(d) == d.domain);
                c.expect(writhe(d) == w);
                c.expect(turning_number(d) == t);
                ++built;
            }
        }
    }
    c.expect(built > 0);
    CHECK(c.finish());
}

TEST_CASE("criterion 4: cycle realizations are exact and crossing-free") {
    Criterion c(4, "realize_cycle / realize_cycle_with_writhe reproduce every requested cycle and writhe", 30.0);

    int plain = 0;
    for (const int len : {2, 4, 6, 8}) {
        for (const auto& seq : alternating_sequences(len)) {
            const CapCupCycle cyc(seq);
            const int t = cyc.turning_number();
            if (t != 2 && t != -2) continue;
            const Diagram d = realize_cycle(cyc);
            c.expect(crossing_count(d) == 0);
            c.expect(is_knot(d));
            c.expect(cap_cup_cycle(d) == cyc);
            c.expect(turning_number(d) == t);
            ++plain;
        }
    }
    c.expect(plain > 0);

    const auto& twisted = twisted_realizations();
    c.expect(!twisted.empty());
    for (const auto& r : twisted) {
        c.expect(is_knot(r.d));
        c.expect(writhe(r.d) == r.writhe);
        c.expect(cap_cup_cycle(r.d) == r.cycle);
        c.expect(turning_number(r.d) == r.cycle.turning_number());
    }
    CHECK(c.finish());
}

TEST_CASE("criterion 5: random knots satisfy the writhe/turning parity") {
    Criterion c(5, "500 seeded random knots on <=14 slices satisfy 2w + t == 2 (mod 4)", 10.0);
    const auto& corpus = knot_corpus();
    c.expect(corpus.size() == 500);
    for (const Diagram& k : corpus) {
        c.expect(static_cast<int>(k.slices.size()) <= 14);
        c.expect(is_knot(k));
        c.expect(((2 * writhe(k) + turning_number(k)) % 4 + 4) % 4 == 2);
    }
    CHECK(c.finish());
}

TEST_CASE("criterion 6: rewriting moves preserve all diagram invariants") {
    Criterion c(6, "1000 random moves preserve writhe, turning, cycle, components and boundaries", 30.0);
    Rng rng(0x5eed0006ULL);
    int moves_done = 0;
    while (moves_done < 1000) {
        Diagram d = random_closed_diagram(rng, 12);
        const Snapshot base = snapshot(d);
        for (int step = 0; step < 5 && moves_done < 1000; ++step) {
            const std::optional<Move> mv = random_move(rng, d, 16);
            c.expect(mv.has_value());
            if (!mv) break;
            d = apply_move(d, *mv).first;
            ++moves_done;
            c.expect(snapshot(d) == base);
        }
    }
    CHECK(c.finish());
}

TEST_CASE("criterion 7: equality search finds verified rewrite paths") {
    Criterion c(7, "equiv_search joins isotopic pairs, the braid relation, and 50 scrambled unknots", 120.0);

    // (i) Two realizations of the same framed unknot that differ by a
    // cap slide across a crossing.
    const Diagram slide_a = closed(
        {cap_r(0), cap_r(1), braid_neg(1), cup_l(2), cup_l(0)});
    const Diagram slide_b = closed(
        {cap_r(0), cap_r(0), braid_neg(1), cup_l(1), cup_l(0)});
    const SearchResult slide = equiv_search(slide_a, slide_b, {400'000, 11});
    c.expect(slide.verdict == Verdict::Equal);
    c.expect(replay(slide_a, slide.path) == slide_b);

    // (ii) The braid relation on three open wires.
    Diagram rel_l;
    rel_l.domain = {label_up, label_up, label_up};
    rel_l.slices = {braid_pos(0), braid_pos(1), braid_pos(0)};
    Diagram rel_r = rel_l;
    rel_r.slices = {braid_pos(1), braid_pos(0), braid_pos(1)};
    const SearchResult rel = equiv_search(rel_l, rel_r, {});
    c.expect(rel.verdict == Verdict::Equal);
    c.expect(replay(rel_l, rel.path) == rel_r);

    // (iii) 50 canonical unknot realizations, scrambled by up to 20 random
    // moves (insertions included) within a two-slice growth allowance, are
    // all searched back to their originals under the default state budget.
    // The search window matches the allowance, so the scramble path itself
    // is always inside it.
    Rng rng(0x5eed0007ULL);
    const auto& reals = twisted_realizations();
    const std::size_t stride = std::max<std::size_t>(1, reals.size() / 50);
    int scrambled = 0;
    for (std::size_t idx = 0; idx < reals.size() && scrambled < 50; idx += stride) {
        const Diagram& orig = reals[idx].d;
        const int slice_cap = static_cast<int>(orig.slices.size()) + 2;
        Diagram d = orig;
        for (int step = 0; step < 20; ++step) {
            const std::optional<Move> mv = random_move(rng, d, slice_cap);
            if (!mv) break;
            d = apply_move(d, *mv).first;
        }
        SearchLimits limits;
        limits.max_slices =
            static_cast<int>(std::max(orig.slices.size(), d.slices.size())) + 2;
        const SearchResult res = equiv_search(d, orig, limits);
        c.expect(res.verdict == Verdict::Equal);
        c.expect(replay(d, res.path) == orig);
        ++scrambled;
    }
    c.expect(scrambled == 50);
    CHECK(c.finish());
}

TEST_CASE("criterion 8: braid equality agrees with the exhaustive class table") {
    Criterion c(8, "handle reduction matches exact 3-strand classes on every pair of total length <= 8", 120.0);

    B3Classes classes(12);  // exact partition of all 3-strand words up to length 12

    std::vector<std::vector<std::vector<int>>> by_len(9);
    for (int len = 0; len <= 8; ++len) {
        const std::int64_t count = std::int64_t{1} << (2 * len);
        by_len[static_cast<std::size_t>(len)].reserve(static_cast<std::size_t>(count));
        for (std::int64_t code = 0; code < count; ++code) {
            std::vector<int> word(static_cast<std::size_t>(len));
            for (int j = 0; j < len; ++j) {
                const int digit = static_cast<int>((code >> (2 * j)) & 3);
                word[static_cast<std::size_t>(j)] = (digit / 2 + 1) * (digit % 2 ? -1 : 1);
            }
            by_len[static_cast<std::size_t>(len)].push_back(std::move(word));
        }
    }

    long long pairs = 0;
    long long disagreements = 0;
    for (int lu = 0; lu <= 8; ++lu) {
        for (int lv = 0; lu + lv <= 8; ++lv) {
            for (const auto& u : by_len[static_cast<std::size_t>(lu)]) {
                const BraidWord bu{3, u};
                for (const auto& v : by_len[static_cast<std::size_t>(lv)]) {
                    const bool reduced = braid_equal(bu, BraidWord{3, v});
                    if (reduced != classes.same(u, v)) ++disagreements;
                    ++pairs;
                }
            }
        }
    }
    c.expect(pairs == 757'305);
    c.expect(disagreements == 0);

    c.expect(braid_equal(BraidWord{3, {1, 2, 1}}, BraidWord{3, {2, 1, 2}}));
    c.expect(!braid_equal(BraidWord{3, {1, 2}}, BraidWord{3, {2, 1}}));
    CHECK(c.finish());
}

TEST_CASE("criterion 9: the normalized invariant certifies unknots and survives rewriting") {
    Criterion c(9, "normalized invariant is 1 on realizations, move-invariant, and nontrivial on a knot", 60.0);

    for (const int len : {2, 4, 6, 8}) {
        for (const auto& seq : alternating_sequences(len)) {
            const CapCupCycle cyc(seq);
            if (cyc.turning_number() != 2 && cyc.turning_number() != -2) continue;
            c.expect(normalized_invariant(realize_cycle(cyc)).is_one());
        }
    }
    for (const auto& r : twisted_realizations())
        c.expect(normalized_invariant(r.d).is_one());

    Rng rng(0x5eed0009ULL);
    int moves_done = 0;
    while (moves_done < 500) {
        Diagram d = random_closed_diagram(rng, 12);
        const LaurentPoly base = normalized_invariant(d);
        for (int step = 0; step < 10 && moves_done < 500; ++step) {
            const std::optional<Move> mv = random_move(rng, d, 14);
            c.expect(mv.has_value());
            if (!mv) break;
            d = apply_move(d, *mv).first;
            ++moves_done;
            c.expect(normalized_invariant(d) == base);
        }
    }

    const Diagram wp = load_sample("whole_process_knot.bmc");
    const Diagram partner = realize_cycle_with_writhe(cap_cup_cycle(wp), writhe(wp));
    c.expect(!normalized_invariant(wp).is_one());
    c.expect(normalized_invariant(partner).is_one());
    c.expect(writhe(partner) == writhe(wp));
    c.expect(turning_number(partner) == turning_number(wp));
    c.expect(cap_cup_cycle(partner) == cap_cup_cycle(wp));
    CHECK(c.finish());
}

TEST_CASE("criterion 10: reduction instances stay within a factor-4 size bound") {
    Criterion c(10, "word-problem instances are at most 4x the input size on the random corpus", 10.0);
    double worst = 0.0;
    for (const Diagram& k : knot_corpus()) {
        const WordProblemInstance inst = build_instance(k);
        c.expect(inst.lhs == k);
        c.expect(writhe(inst.rhs) == writhe(k));
        c.expect(turning_number(inst.rhs) == turning_number(k));
        c.expect(cap_cup_cycle(inst.rhs) == cap_cup_cycle(k));
        const auto input = static_cast<double>(k.slices.size());
        const auto total =
            static_cast<double>(inst.lhs.slices.size() + inst.rhs.slices.size());
        c.expect(total <= 4.0 * input);
        worst = std::max(worst, total / input);
    }
    char note[160];
    std::snprintf(note, sizeof note,
                  "  note: asymptotic size/time bounds are not reproducible by finite "
                  "tests; this pins the concrete 4x bound (worst observed %.2fx).\n",
                  worst);
    std::cout << note;
    CHECK(c.finish());
}
