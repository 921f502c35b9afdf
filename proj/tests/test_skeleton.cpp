#include <catch2/catch_amalgamated.hpp>

#include "mumford/fixtures.hpp"

using namespace mumford;

TEST_CASE("convex hull tree of the boundary points") {
    Figure fig = fixtures::g2p2_figure();
    std::vector<Type2Point> bpts;
    for (const auto& gp : fig.gens) {
        bpts.push_back({gp.plus.center, gp.plus.vradius, ""});
        bpts.push_back({gp.plus_inv.center, gp.plus_inv.vradius, ""});
    }
    Graph hull = convex_hull_tree(bpts);
    CHECK(hull.verts.size() == 7);
    CHECK(hull.edges.size() == 6);
    CHECK(betti(hull) == 0);
    CHECK(component_count(hull) == 1);
}

TEST_CASE("fundamental skeleton, gluing, and stable contraction") {
    Figure fig = fixtures::g2p2_figure();
    TowerPtr tw = fig.tw;
    FieldElement a = tw->gen(0), b = tw->gen(1);
    auto fe = [&](long q) { return tw->from_rat(Rat(q)); };

    Graph sf = fundamental_skeleton(fig);
    size_t nb = 0;
    for (const auto& v : sf.verts) nb += v.boundary;
    CHECK(sf.verts.size() == 13);
    CHECK(nb == 2);
    CHECK(sf.edges.size() == 12);
    CHECK(betti(sf) == 0);

    // the known interior vertices are present
    CHECK(find_vertex(sf, {a, rat(7, 4), ""}).has_value());
    CHECK(find_vertex(sf, {fe(1) + b, rat(5, 4), ""}).has_value());
    CHECK(find_vertex(sf, {a, rat(3, 4), ""}).has_value()); // the meet of all branches
    // the white dots are the boundary-marked D+(gamma^-1) points
    auto w1 = find_vertex(sf, {-a, Rat(2), ""});
    REQUIRE(w1.has_value());
    CHECK(sf.verts[*w1].boundary);

    Graph gl = glue_mumford(fig);
    CHECK(gl.verts.size() == 11);
    CHECK(gl.edges.size() == 12);
    CHECK(betti(gl) == 2);
    CHECK(gl.gluing.size() == 2);

    Graph st = stable_contraction(gl);
    int loops = 0, bridges = 0;
    for (const auto& e : st.edges) (e.u == e.v ? loops : bridges)++;
    CHECK(st.verts.size() == 2);
    CHECK(loops == 2);
    CHECK(bridges == 1);
    CHECK(betti(st) == 2);
    CHECK(find_vertex(st, {a, rat(3, 2), ""}).has_value());
    CHECK(find_vertex(st, {fe(1) + b, Rat(1), ""}).has_value());
}

TEST_CASE("galois orbits on the glued skeleton") {
    Figure fig = fixtures::g2p2_figure();
    Graph gl = glue_mumford(fig);
    OrbitReport rep = galois_orbits(gl, fig);
    CHECK(rep.faithful);
    CHECK(rep.faithfulness.size() == 3); // Gal(L/K) has 3 nontrivial elements
    for (const auto& w : rep.faithfulness) CHECK(w.moved);
    CHECK(rep.vertex_orbits.size() < gl.verts.size()); // something is identified
    CHECK(component_count(rep.quotient) == 1);
}

TEST_CASE("fields of definition, multiplicities, and the bound") {
    Figure fig = fixtures::g2p2_figure();
    REQUIRE(fig.lattice);
    const SubfieldLattice& lat = *fig.lattice;
    TowerPtr tw = fig.tw;
    FieldElement a = tw->gen(0);
    auto fe = [&](long q) { return tw->from_rat(Rat(q)); };

    CHECK(field_of_definition({a, rat(3, 2), ""}, lat) == "K(sqrt2)");
    CHECK(field_of_definition({a, rat(7, 4), ""}, lat) == "L");
    CHECK(field_of_definition({fe(0), Rat(1), ""}, lat) == "K");
    CHECK(multiplicity_over({a, rat(7, 4), ""}, lat.fields[lat.index_of("L")]) == 1);
    CHECK(multiplicity_over({a, rat(7, 4), ""}, lat.base()) == 4);
    CHECK(quotient_multiplicity_bound({a, rat(7, 4), ""}, lat) == 4);

    Graph gl = glue_mumford(fig);
    Graph yy = contract_L_only(gl, lat);
    REQUIRE(yy.verts.size() == 5);
    int nsqrt2 = 0, ni = 0;
    for (const auto& v : yy.verts) {
        std::string f = field_of_definition(v.pt, lat);
        if (f == "K(sqrt2)") ++nsqrt2;
        if (f == "K(i)") ++ni;
        CHECK(2 % quotient_multiplicity_bound(v.pt, lat) == 0);
    }
    CHECK(nsqrt2 == 3);
    CHECK(ni == 2);

    StabilizationResult sb = stabilization_bound(yy, lat);
    CHECK(sb.m == 2);
    CHECK(sb.degree_L_over_K == 4);
    CHECK(sb.divides);
    CHECK(sb.strict_gap);
}

TEST_CASE("multiplicity-one subdivision respects the lattice step") {
    Figure fig = fixtures::g2p2_figure();
    Graph sf = fundamental_skeleton(fig);
    // every edge of Sigma_F has length 1/e in the absolute normalization
    long e = fig.lattice->top().e_abs;
    for (const auto& ed : sf.edges) {
        REQUIRE(ed.length.has_value());
        CHECK(*ed.length == Rat(1, e));
    }
}
