#include <catch2/catch_amalgamated.hpp>

#include "mumford/pline.hpp"

using namespace mumford;

namespace {

TowerPtr q2() { return FieldTower::build(2, {}, true); }

} // namespace

TEST_CASE("type-2 point lattice") {
    TowerPtr tw = q2();
    auto fe = [&](long q) { return tw->from_rat(Rat(q)); };
    Type2Point e01{fe(0), Rat(1), ""}, e21{fe(2), Rat(1), ""}, e11{fe(1), Rat(1), ""};
    Type2Point e02{fe(0), Rat(2), ""};

    CHECK(type2_equal(e01, e21)); // v(2) = 1 >= r
    CHECK_FALSE(type2_equal(e01, e11));
    CHECK_FALSE(type2_equal(e01, e02));

    CHECK(type2_leq(e01, e02));
    CHECK_FALSE(type2_leq(e02, e01));
    CHECK(type2_leq(e01, Type2Point{fe(2), Rat(3), ""}));

    Type2Point m = type2_meet(Type2Point{fe(1), Rat(2), ""}, Type2Point{fe(-1), Rat(2), ""});
    CHECK(m.vradius == Rat(1)); // v(1 - (-1)) = 1
    CHECK(type2_equal(type2_meet(e01, e02), e01));
}

TEST_CASE("disc membership") {
    TowerPtr tw = q2();
    auto fe = [&](long q) { return tw->from_rat(Rat(q)); };
    Disc closed{fe(0), Rat(1), true, false, ""};
    Disc open{fe(0), Rat(1), false, false, ""};
    Disc comp{fe(0), Rat(1), true, true, ""};

    CHECK(point_in_disc(P1Point::finite(fe(2)), closed));
    CHECK_FALSE(point_in_disc(P1Point::finite(fe(2)), open));
    CHECK(point_in_disc(P1Point::finite(fe(4)), open));
    CHECK_FALSE(point_in_disc(P1Point::finite(fe(1)), closed));
    CHECK(point_in_disc(P1Point::finite(fe(1)), comp));
    CHECK(point_in_disc(P1Point::infinity(tw), comp));
    CHECK_FALSE(point_in_disc(P1Point::infinity(tw), closed));

    Type2Point gauss{fe(0), Rat(1), ""};
    CHECK(type2_in_disc(gauss, closed));
    CHECK_FALSE(type2_in_disc(gauss, open));
    CHECK_FALSE(type2_in_disc(gauss, comp));
}

TEST_CASE("mobius basics") {
    TowerPtr tw = q2();
    auto fe = [&](long q) { return tw->from_rat(Rat(q)); };
    Mobius m{fe(2), fe(1), fe(0), fe(1), "aff"};   // x -> 2x + 1
    Mobius inv_m = mob_inverse(m);
    CHECK(mob_is_identity(mob_compose(m, inv_m)));
    CHECK(proj_equal(mob_compose(m, inv_m), Mobius{fe(5), fe(0), fe(0), fe(5), ""}));

    Mobius w{fe(0), fe(1), fe(1), fe(0), "inv"};   // x -> 1/x
    CHECK(mob_apply(w, P1Point::finite(fe(0))).at_inf);
    CHECK(mob_apply(w, P1Point::infinity(tw)) == P1Point::finite(fe(0)));
    CHECK(mob_apply(m, P1Point::finite(fe(3))) == P1Point::finite(fe(7)));
}

TEST_CASE("disc images under mobius maps") {
    TowerPtr tw = q2();
    auto fe = [&](long q) { return tw->from_rat(Rat(q)); };
    Mobius aff{fe(2), fe(1), fe(0), fe(1), ""};    // x -> 2x + 1
    Mobius w{fe(0), fe(1), fe(1), fe(0), ""};      // x -> 1/x

    SECTION("affine map shifts the radius by v(a/d)") {
        Disc D{fe(0), Rat(2), true, false, ""};
        Disc im = image_closed_disc(aff, D);
        CHECK(im.center == fe(1));
        CHECK(im.vradius == Rat(3));
        CHECK(im.closed);
        CHECK_FALSE(im.complement);
    }

    SECTION("pole strictly outside gives a closed disc") {
        Disc D{fe(1), Rat(1), true, false, ""}; // pole 0, v(1-0)=0 < 1
        Disc im = image_closed_disc(w, D);
        CHECK(im.closed);
        CHECK_FALSE(im.complement);
        CHECK(im.center == fe(1));
        CHECK(im.vradius == Rat(1));
    }

    SECTION("pole strictly inside gives an open-disc complement") {
        Disc D{fe(0), Rat(1), true, false, ""};
        Disc im = image_closed_disc(w, D);
        CHECK(im.complement);
        CHECK_FALSE(im.closed);
        CHECK(im.center == fe(0));
        CHECK(im.vradius == Rat(-1)); // v(det) - 2 v(c) - r

        Disc oc = image_disc_complement(w, D);
        CHECK_FALSE(oc.closed);
        CHECK_FALSE(oc.complement);
        CHECK(oc.vradius == Rat(-1));
    }

    SECTION("pole on the boundary is rejected") {
        Disc D{fe(2), Rat(1), true, false, ""}; // v(2-0) = 1 = r
        CHECK_THROWS_AS(image_closed_disc(w, D), mf_error);
    }

    SECTION("complement image requires the pole inside") {
        Disc D{fe(1), Rat(1), true, false, ""};
        CHECK_THROWS_AS(image_disc_complement(w, D), mf_error);
        CHECK_THROWS_AS(image_disc_complement(aff, D), mf_error);
    }
}

TEST_CASE("type-2 image") {
    TowerPtr tw = q2();
    auto fe = [&](long q) { return tw->from_rat(Rat(q)); };
    Mobius w{fe(0), fe(1), fe(1), fe(0), ""}; // x -> 1/x

    Type2Point e{fe(0), Rat(1), ""};
    Type2Point im = type2_image(w, e); // Gauss point of B(0,1) maps to eta_{0,-1}
    CHECK(type2_equal(im, Type2Point{fe(0), Rat(-1), ""}));

    // round trip
    CHECK(type2_equal(type2_image(w, im), e));

    // affine image
    Mobius aff{fe(2), fe(1), fe(0), fe(1), ""};
    CHECK(type2_equal(type2_image(aff, e), Type2Point{fe(1), Rat(2), ""}));

    // pole on the boundary sphere
    CHECK_THROWS_AS(type2_image(w, Type2Point{fe(2), Rat(1), ""}), mf_error);
}
