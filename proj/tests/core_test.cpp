#include <catch2/catch_amalgamated.hpp>

#include <braidword/core.hpp>

using namespace braidword;

TEST_CASE("orientation signs are total") {
    CHECK(orientation_sign(label_up) == 1);
    CHECK(orientation_sign(label_down) == -1);
    CHECK(orientation_sign(first_named_label) == 1);
    CHECK(orientation_sign(first_named_label + 7) == 1);
}

TEST_CASE("slice kind predicates") {
    CHECK(is_cap(SliceKind::CapR));
    CHECK(is_cap(SliceKind::CapL));
    CHECK(is_cup(SliceKind::CupR));
    CHECK(is_cup(SliceKind::CupL));
    CHECK(is_braid(SliceKind::BraidPos));
    CHECK(is_braid(SliceKind::BraidNeg));
    CHECK_FALSE(is_turn(SliceKind::BraidPos));
    CHECK(crossing_sign(SliceKind::BraidPos) == 1);
    CHECK(crossing_sign(SliceKind::BraidNeg) == -1);
}

TEST_CASE("caps introduce oriented pairs") {
    Diagram d;
    d.slices = {cap_r(0)};
    auto levels = typecheck(d);
    REQUIRE(levels.size() == 2);
    CHECK(levels[0] == ObjectWord{});
    CHECK(levels[1] == ObjectWord{label_up, label_down});

    d.slices = {cap_l(0)};
    CHECK(codomain(d) == ObjectWord{label_down, label_up});
}

TEST_CASE("cups require matching orientations") {
    Diagram d;
    d.slices = {cap_r(0), cup_l(0)};
    CHECK(is_closed(d));

    d.slices = {cap_r(0), cup_r(0)};
    CHECK_THROWS_AS(typecheck(d), TypeError);

    d.slices = {cap_l(0), cup_r(0)};
    CHECK(is_closed(d));

    d.slices = {cap_l(0), cup_l(0)};
    CHECK_THROWS_AS(typecheck(d), TypeError);
}

TEST_CASE("braidings swap any labels") {
    Diagram d;
    d.domain = {label_up, label_down};
    d.slices = {braid_pos(0)};
    CHECK(codomain(d) == ObjectWord{label_down, label_up});

    d.slices = {braid_neg(0), braid_neg(0)};
    CHECK(codomain(d) == d.domain);
}

TEST_CASE("offsets are bounds checked") {
    Diagram d;
    d.slices = {cap_r(1)};
    CHECK_THROWS_AS(typecheck(d), TypeError);

    d.domain = {label_up};
    d.slices = {braid_pos(0)};
    CHECK_THROWS_AS(typecheck(d), TypeError);

    d.domain = {label_up, label_down};
    d.slices = {braid_pos(-1)};
    CHECK_THROWS_AS(typecheck(d), TypeError);
}

TEST_CASE("named generators rewrite level words") {
    auto sig = std::make_shared<Signature>();
    const Label a = sig->intern_object("A");
    sig->generators.push_back({"m", {a, a}, {a}});

    Diagram d;
    d.signature = sig;
    d.domain = {a, a, a};
    d.slices = {named_gen(0, 1), named_gen(0, 0)};
    CHECK(codomain(d) == ObjectWord{a});

    d.slices = {named_gen(0, 2)};
    CHECK_THROWS_AS(typecheck(d), TypeError);

    d.domain = {a, label_up};
    d.slices = {named_gen(0, 0)};
    CHECK_THROWS_AS(typecheck(d), TypeError);
}

TEST_CASE("named slices with bad ids are rejected") {
    Diagram d;
    d.domain = {label_up};
    d.slices = {named_gen(3, 0)};
    CHECK_THROWS_AS(typecheck(d), TypeError);
}

TEST_CASE("intern_object reuses labels") {
    Signature sig;
    const Label a1 = sig.intern_object("A");
    const Label a2 = sig.intern_object("A");
    const Label b = sig.intern_object("B");
    CHECK(a1 == a2);
    CHECK(a1 != b);
    CHECK(sig.intern_object("^") == label_up);
    CHECK(sig.intern_object("v") == label_down);
    CHECK(sig.object_name(a1) == "A");
    CHECK(sig.object_name(label_up) == "^");
}

TEST_CASE("diagram equality compares signature contents") {
    Diagram a, b;
    a.slices = {cap_r(0), cup_l(0)};
    b.slices = {cap_r(0), cup_l(0)};
    CHECK(a == b);
    b.slices[0] = cap_l(0);
    CHECK_FALSE(a == b);
}

TEST_CASE("crossing count and named detection") {
    Diagram d;
    d.slices = {cap_r(0), braid_pos(0), braid_neg(0), cup_l(0)};
    CHECK(crossing_count(d) == 2);
    CHECK_FALSE(has_named_slice(d));
}
