#include <catch2/catch_amalgamated.hpp>

#include <braidword/core.hpp>
#include <braidword/invariants.hpp>

using namespace braidword;

namespace {

Diagram closed(std::vector<Slice> slices) {
    Diagram d;
    d.slices = std::move(slices);
    return d;
}

const Diagram rotang = closed({cap_r(0), cap_l(2), braid_pos(1), braid_neg(0),
                               braid_neg(2), cup_r(0), cup_l(0)});

const Diagram whole_process =
    closed({cap_r(0), cap_r(2), cap_l(4), braid_neg(1), braid_neg(3), braid_pos(0),
            braid_pos(2), braid_neg(1), braid_neg(3), cup_l(0), cup_l(0), cup_r(0)});

const Diagram twist_knot = closed({cap_r(0), cap_r(2), braid_pos(1), braid_neg(0),
                                   braid_neg(2), cup_l(1), cup_l(0)});

CapCupCycle cyc(std::vector<SliceKind> ks) { return CapCupCycle(std::move(ks)); }

}  // namespace

TEST_CASE("writhe of the golden knots") {
    CHECK(writhe(rotang) == 3);
    CHECK(writhe(whole_process) == 2);
    CHECK(writhe(twist_knot) == -3);
    CHECK(writhe(closed({cap_r(0), cup_l(0)})) == 0);
}

TEST_CASE("writhe of one-crossing kinks") {
    CHECK(writhe(closed({cap_r(0), braid_neg(0), cup_r(0)})) == 1);
    CHECK(writhe(closed({cap_r(0), braid_pos(0), cup_r(0)})) == -1);
}

TEST_CASE("writhe on open diagrams uses entering orientations") {
    Diagram d;
    d.domain = {label_up, label_up};
    d.slices = {braid_pos(0)};
    CHECK(writhe(d) == 1);
    d.domain = {label_up, label_down};
    CHECK(writhe(d) == -1);
    d.slices = {braid_neg(0)};
    CHECK(writhe(d) == 1);
}

TEST_CASE("turning numbers") {
    CHECK(turning_number(rotang) == 0);
    CHECK(turning_number(whole_process) == 2);
    CHECK(turning_number(twist_knot) == 4);
    CHECK(turning_number(closed({cap_r(0), cup_l(0)})) == 2);
    CHECK(turning_number(closed({cap_l(0), cup_r(0)})) == -2);
}

TEST_CASE("knot parity law on the goldens") {
    for (const Diagram* d : {&rotang, &whole_process, &twist_knot}) {
        const long long p = 2 * writhe(*d) + turning_number(*d);
        CHECK(((p % 4) + 4) % 4 == 2);
    }
}

TEST_CASE("cap cup cycles of the golden knots") {
    CHECK(cap_cup_cycle(rotang) ==
          cyc({SliceKind::CapR, SliceKind::CupL, SliceKind::CapL, SliceKind::CupR}));
    CHECK(cap_cup_cycle(whole_process) ==
          cyc({SliceKind::CapR, SliceKind::CupR, SliceKind::CapL, SliceKind::CupL,
               SliceKind::CapR, SliceKind::CupL}));
    CHECK(cap_cup_cycle(twist_knot) ==
          cyc({SliceKind::CapR, SliceKind::CupL, SliceKind::CapR, SliceKind::CupL}));
}

TEST_CASE("cycles compare up to rotation") {
    const auto a = cyc({SliceKind::CapL, SliceKind::CupR, SliceKind::CapR, SliceKind::CupL});
    const auto b = cyc({SliceKind::CapR, SliceKind::CupL, SliceKind::CapL, SliceKind::CupR});
    CHECK(a == b);
    CHECK(a.turns().front() == SliceKind::CapR);

    const auto c = cyc({SliceKind::CapL, SliceKind::CupL, SliceKind::CapR,
                        SliceKind::CupL, SliceKind::CapR, SliceKind::CupR});
    CHECK(c == cap_cup_cycle(whole_process));
}

TEST_CASE("cycle properties") {
    const auto c = cap_cup_cycle(rotang);
    CHECK(c.size() == 4);
    CHECK(c.turning_number() == 0);
    CHECK(c.alternates());
    CHECK(cyc({}).empty());
    CHECK_FALSE(cyc({SliceKind::CapR, SliceKind::CapL}).alternates());
    CHECK_THROWS_AS(cyc({SliceKind::BraidPos}), PrecondViolation);
}

TEST_CASE("turning number rejects named generators") {
    Diagram d;
    auto sig = std::make_shared<Signature>();
    sig->generators.push_back({"f", {}, {}});
    d.signature = sig;
    d.slices = {named_gen(0, 0)};
    CHECK_THROWS_AS(turning_number(d), PrecondViolation);
}

TEST_CASE("bridge predicates") {
    CHECK(is_bridge_position(closed({cap_r(0), cup_l(0)})));
    CHECK(is_bridge_position(whole_process));
    const Diagram unnorm = closed({cap_r(0), cap_r(2), cup_r(1), cap_r(1), braid_neg(0),
                                   braid_neg(2), braid_pos(1), cup_l(0), cup_l(0)});
    CHECK_FALSE(is_bridge_position(unnorm));
    CHECK(bridge_number(unnorm) == 3);
    CHECK(bridge_number(whole_process) == 3);
    CHECK(is_bridge_position(closed({})));
}

TEST_CASE("invariant report") {
    const auto r = invariant_report(whole_process);
    CHECK(r.writhe == 2);
    CHECK(r.turning == 2);
    CHECK(r.components == 1);
    CHECK(r.is_knot);
    CHECK(r.cycle == cap_cup_cycle(whole_process));
    CHECK(r.bridge_number == 3);
    CHECK(r.bridge_position);

    const auto two = invariant_report(closed({cap_r(0), cap_r(0), cup_l(0), cup_l(0)}));
    CHECK(two.components == 2);
    CHECK_FALSE(two.is_knot);

    Diagram open;
    open.domain = {label_up};
    CHECK_THROWS_AS(invariant_report(open), PrecondViolation);
}

TEST_CASE("cycle string form") {
    CHECK(cap_cup_cycle(closed({cap_r(0), cup_l(0)})).str() == "(capR, cupL)");
}
