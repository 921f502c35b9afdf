#include <catch2/catch_amalgamated.hpp>

#include "mumford/fixtures.hpp"

using namespace mumford;

TEST_CASE("schottky figure verification") {
    Figure fig = fixtures::g2p2_figure();

    Report rep = verify_figure(fig);
    CHECK(rep.ok);
    CHECK(rep.items.size() == 10); // C(4,2) disjointness pairs + 4 signed generators

    SECTION("parallel checking agrees") {
        Report par = verify_figure(fig, 4);
        CHECK(par.ok);
        CHECK(par.items.size() == rep.items.size());
    }

    SECTION("a shrunk disc breaks disjointness and the subdisc identity") {
        Figure bad = fig;
        bad.gens[0].plus.vradius = rat(1, 2);
        Report br = verify_figure(bad);
        CHECK_FALSE(br.ok);
        bool named = false;
        for (const auto& it : br.items)
            if (!it.ok && it.what.find("gamma1") != std::string::npos) named = true;
        CHECK(named);
    }
}

TEST_CASE("fundamental domain and reduction") {
    Figure fig = fixtures::g2p2_figure();
    TowerPtr tw = fig.tw;
    auto fe = [&](long q) { return tw->from_rat(Rat(q)); };

    CHECK(in_fundamental_domain(fig, FigPoint(P1Point::finite(fe(0)))));
    CHECK(in_fundamental_domain(fig, FigPoint(P1Point::infinity(tw))));
    // the center of D+(gamma1^-1) is outside F
    CHECK_FALSE(in_fundamental_domain(fig, FigPoint(P1Point::finite(-tw->gen(0)))));

    const Mobius& g1 = fig.gens[0].g;
    const Mobius& g2 = fig.gens[1].g;
    Mobius w = mob_compose(g1, mob_compose(mob_inverse(g2), g1));
    FigPoint x = FigPoint(mob_apply(w, P1Point::finite(fe(0))));
    Reduction red = reduce_point(fig, x);
    CHECK(in_fundamental_domain(fig, red.point));
    CHECK(red.word.size() == 3);

    // depth exhaustion raises
    CHECK_THROWS_AS(reduce_point(fig, x, 1), mf_error);
}

TEST_CASE("membership semi-decision") {
    Figure fig = fixtures::g2p2_figure();
    TowerPtr tw = fig.tw;
    FieldElement a = tw->gen(0);
    auto fe = [&](long q) { return tw->from_rat(Rat(q)); };
    const Mobius& g1 = fig.gens[0].g;
    const Mobius& g2 = fig.gens[1].g;

    CHECK(is_member(fig, g1).verdict == Membership::yes);
    CHECK(is_member(fig, mob_inverse(g2)).verdict == Membership::yes);

    Mobius w = mob_compose(g1, mob_compose(mob_inverse(g2), g1));
    MemberResult mr = is_member(fig, w);
    CHECK(mr.verdict == Membership::yes);
    CHECK(mr.word == std::vector<std::string>{"gamma1", "gamma2^-1", "gamma1"});

    // the coordinate change P (fixed points of gamma1 to 0, inf) is not in the group
    Mobius P{-a, -a, fe(-1), fe(1), "P"};
    CHECK(is_member(fig, P).verdict == Membership::no);

    // identity is a member with the empty word
    Mobius id{fe(1), fe(0), fe(0), fe(1), "id"};
    MemberResult mi = is_member(fig, id);
    CHECK(mi.verdict == Membership::yes);
    CHECK(mi.word.empty());
}

TEST_CASE("galois descent condition (c)") {
    Figure fig = fixtures::g2p2_figure();
    DescentReport rep = check_descent_condition_c(fig);
    REQUIRE(rep.ok);
    REQUIRE(rep.entries.size() == 4);
    auto find = [&](const std::string& s, const std::string& g) -> const DescentEntry& {
        for (const auto& e : rep.entries)
            if (e.sigma == s && e.gen == g) return e;
        FAIL("missing entry");
        return rep.entries.front();
    };
    CHECK(find("sigma", "gamma1").maps_to == "gamma1^-1");
    CHECK(find("sigma", "gamma2").maps_to == "gamma2");
    CHECK(find("tau", "gamma1").maps_to == "gamma1");
    CHECK(find("tau", "gamma2").maps_to == "gamma2^-1");
    for (const auto& e : rep.entries) CHECK(e.exact);
}

TEST_CASE("limit point sample stays in the paired discs") {
    Figure fig = fixtures::g2p2_figure();
    auto pts = limit_point_sample(fig, 2);
    CHECK(pts.size() > 4);
    // every sampled orbit point of the centers lies in one of the 4 closed discs
    for (const auto& x : pts) {
        bool in_some = false;
        for (const auto& gp : fig.gens)
            if (point_in_disc(x, gp.plus) || point_in_disc(x, gp.plus_inv)) in_some = true;
        CHECK(in_some);
    }
}
