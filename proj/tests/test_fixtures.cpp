#include <catch2/catch_amalgamated.hpp>

#include "mumford/fixtures.hpp"

using namespace mumford;

namespace {

void report_failures(const fixtures::ExampleResult& res) {
    for (const auto& c : res.checks)
        if (!c.ok)
            UNSCOPED_INFO(c.what << " [" << c.citation << "] expected " << c.expected
                                 << " got " << c.actual);
}

} // namespace

TEST_CASE("golden example: genus 2 at p = 2") {
    auto res = fixtures::run_g2p2();
    report_failures(res);
    CHECK(res.ok);
    CHECK(res.checks.size() >= 15);
    for (const auto& c : res.checks) CHECK_FALSE(c.citation.empty());
}

TEST_CASE("golden example: genus 2p family at p = 3") {
    auto res = fixtures::run_g2p(3);
    report_failures(res);
    CHECK(res.ok);
}

TEST_CASE("golden example: genus 2p family at p = 2") {
    auto res = fixtures::run_g2p(2);
    report_failures(res);
    CHECK(res.ok);
}

TEST_CASE("figure JSON round trip") {
    Figure fig = fixtures::g2p2_figure();
    json j = figure_json(fig);
    Figure back = figure_from_json(j);
    CHECK(back.tw->n == fig.tw->n);
    REQUIRE(back.gens.size() == fig.gens.size());
    for (size_t i = 0; i < fig.gens.size(); ++i) {
        // `back` lives in a freshly built tower, so compare coordinates
        CHECK(back.gens[i].g.a.c == fig.gens[i].g.a.c);
        CHECK(back.gens[i].g.b.c == fig.gens[i].g.b.c);
        CHECK(back.gens[i].g.c.c == fig.gens[i].g.c.c);
        CHECK(back.gens[i].g.d.c == fig.gens[i].g.d.c);
        CHECK(back.gens[i].plus.center.c == fig.gens[i].plus.center.c);
        CHECK(back.gens[i].plus.vradius == fig.gens[i].plus.vradius);
    }
    CHECK(back.galois.size() == fig.galois.size());
    REQUIRE(back.lattice);
    CHECK(back.lattice->top().name == fig.lattice->top().name);
    CHECK(verify_figure(back).ok);

    // serialization is deterministic
    CHECK(figure_json(back).dump() == j.dump());
}

TEST_CASE("maclane JSON round trip") {
    TowerPtr tw = FieldTower::build(2, {}, true);
    MLValuation v = make_mlv(tw, "K", 1,
                             {{poly_from_rats(tw, {Rat(0), Rat(1)}), rat(1, 2)},
                              {poly_from_rats(tw, {Rat(-2), Rat(0), Rat(1)}), rat(5, 4)}});
    MLValuation back = mlv_from_json(tw, mlv_json(v), 1);
    CHECK(compare(v, back) == MLOrder::equal);
    CHECK(multiplicity(back) == 4);
}

TEST_CASE("graph DOT output") {
    Figure fig = fixtures::g2p2_figure();
    Graph st = stable_contraction(glue_mumford(fig));
    annotate(st, *fig.lattice);
    std::string dot = graph_to_dot(st, fig.lattice->base().e_abs);
    CHECK(dot.find("graph skeleton {") == 0);
    CHECK(dot.find("def=K(sqrt2)") != std::string::npos);
    CHECK(dot.find(" -- ") != std::string::npos);
}

TEST_CASE("disc-image sampling oracle") {
    auto r1 = fixtures::disc_image_oracle(fixtures::g2p2_figure(), 100, 1);
    CHECK(r1.ok);
    CHECK(r1.points == 400);
    auto r2 = fixtures::disc_image_oracle(fixtures::g2p_figure(3), 100, 1);
    CHECK(r2.ok);
    auto r3 = fixtures::disc_image_oracle(fixtures::g2p_figure(2), 100, 1);
    CHECK(r3.ok);
}
