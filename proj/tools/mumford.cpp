// mumford — command-line front end for the Mumford-curve skeleton library.
//
// Subcommands:
//   tower check FILE            validate a field-tower description
//   schottky verify FILE        check the Schottky-figure conditions
//   schottky member FIG MAT     semi-decide group membership of a matrix
//   schottky descent FIG        check Galois descent condition (c)
//   skeleton fundamental FIG    fundamental skeleton Sigma_F
//   skeleton mumford FIG        glued skeleton and stable contraction
//   skeleton orbits FIG         Galois orbits on the glued skeleton
//   skeleton bound FIG          stabilization-index divisibility bound
//   maclane eval|mult|cmp|inf|candidates FILE
//   examples NAME [--p N] [--diff]
//
// Exit codes: 0 success/match, 1 verification failure or fixture mismatch,
// 2 input error.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "mumford/fixtures.hpp"

namespace {

using namespace mumford;

struct Options {
    std::string json_file, dot_file;
    int depth = 8;
    int jobs = 1;
    long seed = 0xC0FFEE;
    long samples = 0;
    bool diff = false;
    long p = 3, vbeta = 4, vbetap = 5;
    std::string figure_out;
};

void add_common(CLI::App* cmd, Options& opt) {
    cmd->add_option("--json", opt.json_file, "write the JSON report to FILE");
    cmd->add_option("--depth", opt.depth, "reduction depth bound")->default_val(8);
    cmd->add_option("--seed", opt.seed, "seed for randomized oracles");
    cmd->add_option("--samples", opt.samples, "sample count for randomized oracles");
    cmd->add_option("--jobs", opt.jobs, "parallel jobs for independent checks")->default_val(1);
}

void emit(const json& report, const Options& opt) {
    if (opt.json_file.empty()) {
        std::cout << report.dump(2) << "\n";
        return;
    }
    std::ofstream out(opt.json_file);
    if (!out) throw mf_error("BadOutput", "cannot write '" + opt.json_file + "'");
    out << report.dump(2) << "\n";
}

void emit_dot(const Graph& g, long e_base, const Options& opt) {
    if (opt.dot_file.empty()) return;
    std::ofstream out(opt.dot_file);
    if (!out) throw mf_error("BadOutput", "cannot write '" + opt.dot_file + "'");
    out << graph_to_dot(g, e_base);
}

long display_scale(const Figure& fig) {
    return fig.lattice ? fig.lattice->base().e_abs : 1;
}

std::string membership_str(Membership m) {
    switch (m) {
        case Membership::yes: return "yes";
        case Membership::no: return "no";
        default: return "inconclusive";
    }
}

json report_json(const Report& rep) {
    json items = json::array();
    for (const auto& it : rep.items) {
        json j{{"what", it.what}, {"ok", it.ok}};
        if (!it.detail.empty()) j["detail"] = it.detail;
        items.push_back(std::move(j));
    }
    return {{"ok", rep.ok}, {"checks", items}};
}

// --- subcommand bodies ---

int cmd_tower_check(const std::string& file, const Options& opt) {
    json j = load_json_file(file);
    TowerPtr tw = tower_from_json(j); // build() spot-checks the arithmetic
    json gens = json::array();
    std::vector<FieldElement> gen_elems;
    for (size_t i = 0; i < tw->steps.size(); ++i) {
        FieldElement g = tw->gen(i);
        gen_elems.push_back(g);
        json jg{{"name", tw->steps[i].name}, {"degree", tw->steps[i].deg}};
        if (tw->certificate) jg["valuation"] = v_of(g).str();
        gens.push_back(std::move(jg));
    }
    json rep{{"ok", true},
             {"prime", tw->p.get_si()},
             {"degree", tw->n},
             {"generators", gens}};
    if (tw->certificate) rep["ramification_index"] = ramification_index(gen_elems);
    emit(rep, opt);
    return 0;
}

int cmd_schottky_verify(const std::string& file, const Options& opt) {
    Figure fig = figure_from_json(load_json_file(file));
    Report rep = verify_figure(fig, opt.jobs);
    json out = report_json(rep);
    out["rank"] = fig.gens.size();
    if (opt.samples > 0) {
        auto orc = fixtures::disc_image_oracle(fig, static_cast<size_t>(opt.samples),
                                               static_cast<std::uint64_t>(opt.seed));
        out["sampling_oracle"] = {{"ok", orc.ok},
                                  {"pairs", orc.pairs},
                                  {"points", orc.points},
                                  {"seed", opt.seed},
                                  {"samples_per_pair", opt.samples},
                                  {"detail", orc.detail}};
        if (!orc.ok) out["ok"] = false;
    }
    emit(out, opt);
    return out["ok"].get<bool>() ? 0 : 1;
}

int cmd_schottky_member(const std::string& fig_file, const std::string& mat_file,
                        const Options& opt) {
    Figure fig = figure_from_json(load_json_file(fig_file));
    Mobius m = mobius_from_json(fig.tw, load_json_file(mat_file), "query");
    MemberResult mr = is_member(fig, m, opt.depth);
    json rep{{"verdict", membership_str(mr.verdict)},
             {"word", mr.word},
             {"note", mr.note},
             {"depth", opt.depth}};
    emit(rep, opt);
    return mr.verdict == Membership::yes ? 0 : 1;
}

int cmd_schottky_descent(const std::string& file, const Options& opt) {
    Figure fig = figure_from_json(load_json_file(file));
    if (fig.galois.empty())
        throw mf_error("BadInput", "figure carries no Galois automorphisms");
    DescentReport rep = check_descent_condition_c(fig, opt.depth);
    json entries = json::array();
    for (const auto& e : rep.entries)
        entries.push_back({{"sigma", e.sigma},
                           {"gen", e.gen},
                           {"exact", e.exact},
                           {"maps_to", e.maps_to},
                           {"verdict", membership_str(e.verdict)}});
    emit({{"ok", rep.ok}, {"entries", entries}}, opt);
    return rep.ok ? 0 : 1;
}

int cmd_skeleton_fundamental(const std::string& file, const Options& opt) {
    Figure fig = figure_from_json(load_json_file(file));
    Graph g = fundamental_skeleton(fig);
    if (fig.lattice) annotate(g, *fig.lattice);
    emit(graph_json(g), opt);
    emit_dot(g, display_scale(fig), opt);
    return 0;
}

int cmd_skeleton_mumford(const std::string& file, const Options& opt) {
    Figure fig = figure_from_json(load_json_file(file));
    Graph glued = glue_mumford(fig);
    Graph stable = stable_contraction(glued);
    if (fig.lattice) {
        annotate(glued, *fig.lattice);
        annotate(stable, *fig.lattice);
    }
    json rep{{"glued", graph_json(glued)},
             {"stable", graph_json(stable)},
             {"betti", betti(stable)}};
    emit(rep, opt);
    emit_dot(stable, display_scale(fig), opt);
    return 0;
}

int cmd_skeleton_orbits(const std::string& file, const Options& opt) {
    Figure fig = figure_from_json(load_json_file(file));
    if (fig.galois.empty())
        throw mf_error("BadInput", "figure carries no Galois automorphisms");
    Graph glued = glue_mumford(fig);
    OrbitReport rep = galois_orbits(glued, fig, opt.depth);
    json wits = json::array();
    for (const auto& w : rep.faithfulness)
        wits.push_back({{"element", w.element},
                        {"moved", w.moved},
                        {"kind", w.kind},
                        {"witness", w.what}});
    json out{{"vertex_orbits", rep.vertex_orbits},
             {"edge_orbits", rep.edge_orbits},
             {"faithful", rep.faithful},
             {"witnesses", wits},
             {"quotient", graph_json(rep.quotient)}};
    emit(out, opt);
    emit_dot(rep.quotient, display_scale(fig), opt);
    return rep.faithful ? 0 : 1;
}

int cmd_skeleton_bound(const std::string& file, const Options& opt) {
    Figure fig = figure_from_json(load_json_file(file));
    if (!fig.lattice)
        throw mf_error("BadInput", "figure carries no subfield lattice");
    Graph stable = stable_contraction(glue_mumford(fig));
    annotate(stable, *fig.lattice);
    StabilizationResult res = stabilization_bound(stable, *fig.lattice);
    json per = json::array();
    for (const auto& [f, b] : res.per_vertex)
        per.push_back({{"field", f}, {"bound", b}});
    emit({{"m", res.m},
          {"degree_L_over_K", res.degree_L_over_K},
          {"divides", res.divides},
          {"strict_gap", res.strict_gap},
          {"per_vertex", per}},
         opt);
    emit_dot(stable, display_scale(fig), opt);
    return res.divides ? 0 : 1;
}

// Mac Lane inputs come as one JSON file: {"tower": ..., "base": "K",
// "e_base": N, "valuation": {...}} plus "poly", "w" or "set" per subcommand.
struct MLInput {
    TowerPtr tw;
    long e_base = 1;
    json j;
};

MLInput ml_load(const std::string& file) {
    MLInput in;
    in.j = load_json_file(file);
    in.tw = tower_from_json(in.j.at("tower"));
    in.e_base = in.j.value("e_base", 1);
    return in;
}

MLValuation ml_get(const MLInput& in, const std::string& key) {
    return mlv_from_json(in.tw, in.j.at(key), in.e_base);
}

int cmd_maclane_eval(const std::string& file, const Options& opt) {
    MLInput in = ml_load(file);
    MLValuation v = ml_get(in, "valuation");
    Poly f = poly_from_json(in.tw, in.j.at("poly"));
    json rep{{"value", evaluate(v, f).str()}};
    if (opt.samples > 0) {
        OracleResult orc = multiplicativity_oracle(v, static_cast<size_t>(opt.samples),
                                                   static_cast<std::uint64_t>(opt.seed));
        rep["multiplicativity_oracle"] = {{"ok", orc.ok},
                                          {"samples", orc.samples},
                                          {"seed", opt.seed},
                                          {"detail", orc.detail}};
        if (!orc.ok) {
            emit(rep, opt);
            return 1;
        }
    }
    emit(rep, opt);
    return 0;
}

int cmd_maclane_mult(const std::string& file, const Options& opt) {
    MLInput in = ml_load(file);
    MLValuation v = ml_get(in, "valuation");
    json truncs = json::array();
    for (const auto& t : truncations(v))
        truncs.push_back({{"length", t.chain.size()}, {"multiplicity", multiplicity(t)}});
    emit({{"multiplicity", multiplicity(v)}, {"truncations", truncs}}, opt);
    return 0;
}

int cmd_maclane_cmp(const std::string& file, const Options& opt) {
    MLInput in = ml_load(file);
    MLValuation v = ml_get(in, "v"), w = ml_get(in, "w");
    size_t samples = opt.samples > 0 ? static_cast<size_t>(opt.samples) : 200;
    MLOrder o = compare(v, w, samples, static_cast<std::uint64_t>(opt.seed));
    emit({{"order", ml_order_str(o)}, {"samples", samples}, {"seed", opt.seed}}, opt);
    return 0;
}

int cmd_maclane_inf(const std::string& file, const Options& opt) {
    MLInput in = ml_load(file);
    MLValuation v = ml_get(in, "v"), w = ml_get(in, "w");
    MLValuation m = infimum(v, w);
    emit({{"infimum", mlv_json(m)},
          {"vs_v", ml_order_str(compare(m, v))},
          {"vs_w", ml_order_str(compare(m, w))}},
         opt);
    return 0;
}

int cmd_maclane_candidates(const std::string& file, const Options& opt) {
    MLInput in = ml_load(file);
    std::vector<MLValuation> S;
    for (const auto& jv : in.j.at("set")) S.push_back(mlv_from_json(in.tw, jv, in.e_base));
    auto cands = principal_candidates(S);
    json jc = json::array();
    for (const auto& c : cands) jc.push_back(mlv_json(c));
    InfClosedResult icr = inf_closed(S);
    emit({{"candidates", jc},
          {"inf_closed", icr.closed},
          {"stability_index_bound", stability_index_bound(S)}},
         opt);
    return 0;
}

int cmd_examples(const std::string& name, const Options& opt) {
    if (!opt.figure_out.empty()) {
        Figure fig = name == "g2p2" ? fixtures::g2p2_figure()
                                    : fixtures::g2p_figure(opt.p, opt.vbeta, opt.vbetap);
        std::ofstream out(opt.figure_out);
        if (!out) throw mf_error("BadOutput", "cannot write '" + opt.figure_out + "'");
        out << figure_json(fig).dump(2) << "\n";
    }
    fixtures::ExampleResult res =
        fixtures::run_example(name, opt.p, opt.vbeta, opt.vbetap, opt.depth, opt.jobs);
    emit(fixtures::result_json(res), opt);
    if (opt.diff) {
        for (const auto& c : res.checks)
            if (!c.ok)
                std::cerr << "MISMATCH: " << c.what << "  [" << c.citation << "]  expected "
                          << c.expected << ", got " << c.actual << "\n";
    }
    return res.ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact invariants of Mumford curves: Schottky figures, skeletons, "
                 "Galois orbits, Mac Lane valuations"};
    app.require_subcommand(1);

    Options opt;
    std::string file, file2, example_name;
    int which = 0;

    auto* tower = app.add_subcommand("tower", "field-tower operations")->require_subcommand(1);
    auto* tcheck = tower->add_subcommand("check", "validate a tower description");
    tcheck->add_option("file", file, "tower JSON file")->required();
    add_common(tcheck, opt);
    tcheck->callback([&] { which = 1; });

    auto* schottky = app.add_subcommand("schottky", "Schottky-figure operations")
                         ->require_subcommand(1);
    auto* sverify = schottky->add_subcommand("verify", "check the figure conditions");
    sverify->add_option("file", file, "figure JSON file")->required();
    add_common(sverify, opt);
    sverify->callback([&] { which = 2; });
    auto* smember = schottky->add_subcommand("member", "semi-decide membership of a matrix");
    smember->add_option("figure", file, "figure JSON file")->required();
    smember->add_option("matrix", file2, "2x2 matrix JSON file")->required();
    add_common(smember, opt);
    smember->callback([&] { which = 3; });
    auto* sdescent = schottky->add_subcommand("descent", "check Galois descent condition (c)");
    sdescent->add_option("file", file, "figure JSON file")->required();
    add_common(sdescent, opt);
    sdescent->callback([&] { which = 4; });

    auto* skeleton = app.add_subcommand("skeleton", "skeleton-graph operations")
                         ->require_subcommand(1);
    auto* kfund = skeleton->add_subcommand("fundamental", "fundamental skeleton");
    auto* kmum = skeleton->add_subcommand("mumford", "glued skeleton and stable contraction");
    auto* korb = skeleton->add_subcommand("orbits", "Galois orbits on the glued skeleton");
    auto* kbound = skeleton->add_subcommand("bound", "stabilization-index bound");
    int kwhich = 5;
    for (auto* cmd : {kfund, kmum, korb, kbound}) {
        cmd->add_option("file", file, "figure JSON file")->required();
        cmd->add_option("--dot", opt.dot_file, "write a DOT rendering to FILE");
        add_common(cmd, opt);
        int w = kwhich++;
        cmd->callback([&which, w] { which = w; });
    }

    auto* maclane = app.add_subcommand("maclane", "Mac Lane valuation operations")
                        ->require_subcommand(1);
    auto* meval = maclane->add_subcommand("eval", "evaluate a valuation on a polynomial");
    auto* mmult = maclane->add_subcommand("mult", "multiplicity and truncations");
    auto* mcmp = maclane->add_subcommand("cmp", "partial-order comparison");
    auto* minf = maclane->add_subcommand("inf", "infimum of two valuations");
    auto* mcand = maclane->add_subcommand("candidates", "principal candidates of a set");
    int mwhich = 9;
    for (auto* cmd : {meval, mmult, mcmp, minf, mcand}) {
        cmd->add_option("file", file, "input JSON file")->required();
        add_common(cmd, opt);
        int w = mwhich++;
        cmd->callback([&which, w] { which = w; });
    }

    auto* examples = app.add_subcommand("examples", "run a built-in golden example");
    examples->add_option("name", example_name, "example name: g2p2 or g2p")->required();
    examples->add_option("--p", opt.p, "prime for the g2p family")->default_val(3);
    examples->add_option("--vbeta", opt.vbeta, "v_K(beta) for the g2p family")->default_val(4);
    examples->add_option("--vbetap", opt.vbetap, "v_K(beta') for the g2p family")
        ->default_val(5);
    examples->add_flag("--diff", opt.diff, "print a structured diff of any mismatches");
    examples->add_option("--figure", opt.figure_out,
                         "also export the example's Schottky figure as JSON to FILE");
    add_common(examples, opt);
    examples->callback([&] { which = 14; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        switch (which) {
            case 1: return cmd_tower_check(file, opt);
            case 2: return cmd_schottky_verify(file, opt);
            case 3: return cmd_schottky_member(file, file2, opt);
            case 4: return cmd_schottky_descent(file, opt);
            case 5: return cmd_skeleton_fundamental(file, opt);
            case 6: return cmd_skeleton_mumford(file, opt);
            case 7: return cmd_skeleton_orbits(file, opt);
            case 8: return cmd_skeleton_bound(file, opt);
            case 9: return cmd_maclane_eval(file, opt);
            case 10: return cmd_maclane_mult(file, opt);
            case 11: return cmd_maclane_cmp(file, opt);
            case 12: return cmd_maclane_inf(file, opt);
            case 13: return cmd_maclane_candidates(file, opt);
            case 14: return cmd_examples(example_name, opt);
        }
    } catch (const mf_error& e) {
        std::cerr << "error [" << e.code << "]: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
