#include <catch2/catch_amalgamated.hpp>

#include "mumford/field.hpp"

using namespace mumford;

namespace {

// Q(sqrt2, i) over Q at p = 2.
TowerPtr make_tower() {
    std::vector<FieldTower::Step> steps;
    steps.push_back({"sqrt2", {{Rat(-2)}, {Rat(0)}}, 0});
    steps.push_back({"i", {{Rat(1), Rat(0)}, {Rat(0), Rat(0)}}, 0});
    return FieldTower::build(2, steps, true);
}

} // namespace

TEST_CASE("rational helpers") {
    CHECK(rat(6, 4) == rat(3, 2));
    CHECK(rat_parse("-10/4") == rat(-5, 2));
    CHECK(vp_int(48, 2) == 4);
    CHECK(vp_rat(rat(3, 8), 2) == Val(Rat(-3)));
    CHECK(vp_rat(Rat(0), 2).is_inf());
    CHECK(Val::infinity() > Val(Rat(100)));
    CHECK(val_min(Val(rat(1, 2)), Val(Rat(1))) == Val(rat(1, 2)));
    CHECK(lcm_long(4, 6) == 12);
    CHECK_THROWS_AS(rat_parse("x"), mf_error);
}

TEST_CASE("tower arithmetic") {
    TowerPtr tw = make_tower();
    REQUIRE(tw->n == 4);
    FieldElement a = tw->gen(0), b = tw->gen(1);

    CHECK(a * a == tw->from_rat(2));
    CHECK(b * b == tw->from_rat(-1));
    CHECK((a + b) * (a - b) == tw->from_rat(3));
    CHECK(a * inv(a) == tw->one());
    CHECK(inv(a + b) * (a + b) == tw->one());
    CHECK(tw->gen_by_name("i") == b);
    CHECK_THROWS_AS(inv(tw->zero()), mf_error);
    CHECK_THROWS_AS(tw->gen_by_name("zeta"), mf_error);
}

TEST_CASE("norms and valuations") {
    TowerPtr tw = make_tower();
    FieldElement a = tw->gen(0), b = tw->gen(1);

    CHECK(tw->norm(a) == Rat(4));        // N(sqrt2) = (-2)^2 over degree 4
    CHECK(v_of(a) == Val(rat(1, 2)));
    CHECK(v_of(b) == Val(Rat(0)));
    CHECK(v_of(tw->one() + b) == Val(rat(1, 2)));
    CHECK(v_of(a * b) == Val(rat(1, 2)));
    CHECK(v_of(tw->from_rat(8)) == Val(Rat(3)));
    CHECK(v_of(tw->zero()).is_inf());

    // ultrametric and multiplicativity spot checks
    FieldElement x = a + b, y = rat(3) * a - tw->one();
    CHECK(v_of(x * y) == v_of(x) + v_of(y));
    CHECK(v_of(x + y) >= val_min(v_of(x), v_of(y)));

    CHECK(ramification_index({a, b}) == 2);

    // without a uniqueness certificate the valuation must refuse
    std::vector<FieldTower::Step> steps;
    steps.push_back({"sqrt2", {{Rat(-2)}, {Rat(0)}}, 0});
    TowerPtr uncert = FieldTower::build(2, steps, false);
    CHECK_THROWS_AS(v_of(uncert->gen(0)), mf_error);
}

TEST_CASE("galois automorphisms") {
    TowerPtr tw = make_tower();
    FieldElement a = tw->gen(0), b = tw->gen(1);
    GaloisAuto sigma = make_auto("sigma", tw, {-a, b});
    GaloisAuto tau = make_auto("tau", tw, {a, -b});

    CHECK(apply_auto(sigma, a) == -a);
    CHECK(apply_auto(sigma, a * b + tw->one()) == tw->one() - a * b);
    CHECK(apply_auto(tau, b * b) == tw->from_rat(-1));
    CHECK(auto_equal(compose_auto(sigma, sigma), identity_auto(tw)));
    CHECK_FALSE(auto_equal(sigma, tau));

    auto grp = group_closure(tw, {sigma, tau});
    CHECK(grp.size() == 4);
    CHECK(auto_equal(grp[0], identity_auto(tw)));

    // images must satisfy the minimal polynomial
    CHECK_THROWS_AS(make_auto("bad", tw, {b, a}), mf_error);
}

TEST_CASE("subfield lattice") {
    TowerPtr tw = make_tower();
    FieldElement a = tw->gen(0), b = tw->gen(1);
    SubfieldLattice lat = make_lattice(tw, {{"K", {}},
                                            {"K(sqrt2)", {a}},
                                            {"K(i)", {b}},
                                            {"K(sqrt-2)", {a * b}},
                                            {"L", {a, b, tw->one() + b - a}}});
    CHECK(lat.base().name == "K");
    CHECK(lat.top().name == "L");
    CHECK(lat.degree_over_base(lat.top_index()) == 4);
    CHECK(lat.base().e_abs == 1);
    CHECK(lat.top().e_abs == 4); // v(1 + i - sqrt2) = 3/4 puts 1/4 in the value group

    const Subfield& q2 = lat.fields[1];
    CHECK(subfield_contains(q2, rat(3) * a + tw->one()));
    CHECK_FALSE(subfield_contains(q2, b));
    CHECK(subfield_contains(lat.fields[3], a * b));
    CHECK_FALSE(subfield_contains(lat.fields[3], a));
}
