#pragma once

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "maclane.hpp"
#include "skeleton.hpp"

namespace mumford {

using json = nlohmann::ordered_json;

// --- primitives ---

inline json rat_json(const Rat& q) { return q.get_str(); }

inline Rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
    if (!j.is_string()) throw mf_error("BadJson", "expected a rational string");
    return rat_parse(j.get<std::string>());
}

inline json coords_json(const FieldElement& e) {
    json a = json::array();
    for (const auto& q : e.c) a.push_back(rat_json(q));
    return a;
}

inline FieldElement coords_from_json(TowerPtr tw, const json& j) {
    if (!j.is_array()) throw mf_error("BadJson", "expected a coordinate array");
    std::vector<Rat> c;
    for (const auto& x : j) c.push_back(rat_from_json(x));
    c.resize(tw->n, Rat(0));
    return tw->from_coords(std::move(c));
}

inline std::string fe_str(const FieldElement& e) {
    std::string s = "(";
    for (size_t i = 0; i < e.c.size(); ++i) s += (i ? "," : "") + e.c[i].get_str();
    return s + ")";
}

// --- tower ---

inline json tower_json(const FieldTower& tw) {
    json steps = json::array();
    for (const auto& s : tw.steps) {
        json mp = json::array();
        for (const auto& co : s.minpoly) {
            json v = json::array();
            for (const auto& q : co) v.push_back(rat_json(q));
            mp.push_back(v);
        }
        steps.push_back({{"name", s.name}, {"minpoly", mp}});
    }
    return {{"prime", tw.p.get_si()},
            {"steps", steps},
            {"unique_extension_certificate", tw.certificate}};
}

inline TowerPtr tower_from_json(const json& j) {
    std::vector<FieldTower::Step> steps;
    for (const auto& s : j.at("steps")) {
        FieldTower::Step st;
        st.name = s.at("name").get<std::string>();
        for (const auto& co : s.at("minpoly")) {
            std::vector<Rat> v;
            for (const auto& q : co) v.push_back(rat_from_json(q));
            st.minpoly.push_back(std::move(v));
        }
        steps.push_back(std::move(st));
    }
    return FieldTower::build(Int(j.at("prime").get<long>()), std::move(steps),
                             j.value("unique_extension_certificate", false));
}

// --- discs, matrices, figures ---

inline json disc_json(const Disc& d) {
    return {{"center", coords_json(d.center)},
            {"vradius", rat_json(d.vradius)},
            {"boundary", d.closed ? "closed" : "open"},
            {"side", d.complement ? "complement" : "inside"}};
}

inline Disc disc_from_json(TowerPtr tw, const json& j) {
    Disc d;
    d.center = coords_from_json(tw, j.at("center"));
    d.vradius = rat_from_json(j.at("vradius"));
    std::string b = j.value("boundary", "closed"), s = j.value("side", "inside");
    if (b != "closed" && b != "open") throw mf_error("BadJson", "boundary must be closed|open");
    if (s != "inside" && s != "complement")
        throw mf_error("BadJson", "side must be inside|complement");
    d.closed = b == "closed";
    d.complement = s == "complement";
    return d;
}

inline json mobius_json(const Mobius& m) {
    return json::array({json::array({coords_json(m.a), coords_json(m.b)}),
                        json::array({coords_json(m.c), coords_json(m.d)})});
}

inline Mobius mobius_from_json(TowerPtr tw, const json& j, std::string name = "") {
    if (!j.is_array() || j.size() != 2 || j[0].size() != 2 || j[1].size() != 2)
        throw mf_error("BadJson", "matrix must be 2x2");
    return Mobius{coords_from_json(tw, j[0][0]), coords_from_json(tw, j[0][1]),
                  coords_from_json(tw, j[1][0]), coords_from_json(tw, j[1][1]),
                  std::move(name)};
}

inline json galois_json(const GaloisAuto& g) {
    json imgs = json::array();
    for (const auto& im : g.images) imgs.push_back(coords_json(im));
    return {{"name", g.name}, {"images", imgs}};
}

inline GaloisAuto galois_from_json(TowerPtr tw, const json& j) {
    std::vector<FieldElement> imgs;
    for (const auto& im : j.at("images")) imgs.push_back(coords_from_json(tw, im));
    return make_auto(j.at("name").get<std::string>(), tw, std::move(imgs));
}

inline json lattice_json(const SubfieldLattice& lat) {
    json a = json::array();
    for (const auto& f : lat.fields) {
        json gens = json::array();
        for (const auto& g : f.gens) gens.push_back(coords_json(g));
        a.push_back({{"name", f.name}, {"generators", gens}});
    }
    return a;
}

inline SubfieldLattice lattice_from_json(TowerPtr tw, const json& j) {
    std::vector<std::pair<std::string, std::vector<FieldElement>>> defs;
    for (const auto& f : j) {
        std::vector<FieldElement> gens;
        for (const auto& g : f.at("generators")) gens.push_back(coords_from_json(tw, g));
        defs.push_back({f.at("name").get<std::string>(), std::move(gens)});
    }
    return make_lattice(tw, std::move(defs));
}

inline json figure_json(const Figure& fig) {
    json gens = json::array(), discs = json::array();
    for (const auto& gp : fig.gens) {
        gens.push_back({{"name", gp.name}, {"matrix", mobius_json(gp.g)}});
        discs.push_back({{"gen", gp.name},
                         {"plus", disc_json(gp.plus)},
                         {"plus_inv", disc_json(gp.plus_inv)}});
    }
    json gal = json::array();
    for (const auto& s : fig.galois) gal.push_back(galois_json(s));
    json out{{"tower", tower_json(*fig.tw)},
             {"generators", gens},
             {"discs", discs},
             {"galois", gal}};
    if (fig.lattice) out["subfields"] = lattice_json(*fig.lattice);
    return out;
}

inline Figure figure_from_json(const json& j) {
    Figure fig;
    fig.tw = tower_from_json(j.at("tower"));
    std::map<std::string, Mobius> mats;
    for (const auto& g : j.at("generators")) {
        std::string nm = g.at("name").get<std::string>();
        mats.emplace(nm, mobius_from_json(fig.tw, g.at("matrix"), nm));
    }
    for (const auto& d : j.at("discs")) {
        std::string nm = d.at("gen").get<std::string>();
        auto it = mats.find(nm);
        if (it == mats.end()) throw mf_error("BadJson", "disc for unknown generator " + nm);
        Disc plus = disc_from_json(fig.tw, d.at("plus"));
        Disc pinv = disc_from_json(fig.tw, d.at("plus_inv"));
        plus.name = "D+(" + nm + ")";
        pinv.name = "D+(" + nm + "^-1)";
        fig.gens.push_back({nm, it->second, std::move(plus), std::move(pinv)});
    }
    if (j.contains("galois"))
        for (const auto& g : j.at("galois")) fig.galois.push_back(galois_from_json(fig.tw, g));
    if (j.contains("subfields")) fig.lattice = lattice_from_json(fig.tw, j.at("subfields"));
    return fig;
}

// --- skeleton graphs ---

inline json graph_json(const Graph& g) {
    json verts = json::array();
    for (size_t i = 0; i < g.verts.size(); ++i) {
        const SkVertex& v = g.verts[i];
        json members = json::array();
        for (const auto& m : v.members)
            members.push_back({{"center", coords_json(m.center)}, {"vradius", rat_json(m.vradius)}});
        json jv{{"id", i},
                {"name", v.pt.name},
                {"center", coords_json(v.pt.center)},
                {"vradius", rat_json(v.pt.vradius)},
                {"boundary", v.boundary},
                {"members", members}};
        if (!v.def_field.empty()) {
            jv["field"] = v.def_field;
            jv["multiplicity"] = v.mult;
        }
        verts.push_back(std::move(jv));
    }
    json edges = json::array();
    for (const auto& e : g.edges) {
        json je{{"u", e.u}, {"v", e.v}};
        if (e.via)
            je["via"] = {{"center", coords_json(e.via->center)},
                         {"vradius", rat_json(e.via->vradius)}};
        if (e.length) je["length"] = rat_json(*e.length);
        edges.push_back(std::move(je));
    }
    json gluing = json::array();
    for (const auto& gr : g.gluing)
        gluing.push_back({{"gen", gr.gen},
                          {"removed_center", coords_json(gr.removed.center)},
                          {"removed_vradius", rat_json(gr.removed.vradius)},
                          {"target", gr.target}});
    return {{"vertices", verts}, {"edges", edges}, {"gluing", gluing}};
}

/// DOT emitter.  Radii display base-normalized when e_base > 1.  Boundary
/// (white) vertices are dashed.
inline std::string graph_to_dot(const Graph& g, long e_base = 1) {
    std::ostringstream os;
    os << "graph skeleton {\n";
    for (size_t i = 0; i < g.verts.size(); ++i) {
        const SkVertex& v = g.verts[i];
        Rat r = v.pt.vradius * Rat(e_base);
        r.canonicalize();
        std::string label = (v.pt.name.empty() ? fe_str(v.pt.center) : v.pt.name) + "@" +
                            rat_str(r);
        if (!v.def_field.empty())
            label += " m=" + std::to_string(v.mult) + " def=" + v.def_field;
        os << "  n" << i << " [label=\"" << label << "\"";
        if (v.boundary) os << ", style=dashed";
        os << "];\n";
    }
    for (const auto& e : g.edges) {
        os << "  n" << e.u << " -- n" << e.v;
        if (e.length) {
            Rat l = *e.length * Rat(e_base);
            l.canonicalize();
            os << " [label=\"" << rat_str(l) << "\"]";
        }
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

// --- Mac Lane valuations ---

inline json poly_json(const Poly& f) {
    json a = json::array();
    for (const auto& co : f.c) a.push_back(coords_json(co));
    return a;
}

inline Poly poly_from_json(TowerPtr tw, const json& j) {
    std::vector<FieldElement> c;
    for (const auto& co : j) c.push_back(coords_from_json(tw, co));
    return poly_make(tw, std::move(c));
}

inline json mlv_json(const MLValuation& v) {
    json chain = json::array();
    for (const auto& lv : v.chain)
        chain.push_back({{"phi", poly_json(lv.phi)}, {"lambda", rat_json(lv.lambda)}});
    return {{"base", v.base_name}, {"chain", chain}};
}

inline MLValuation mlv_from_json(TowerPtr tw, const json& j, long e_base = 1) {
    std::vector<MLValuation::Level> chain;
    for (const auto& lv : j.at("chain"))
        chain.push_back({poly_from_json(tw, lv.at("phi")), rat_from_json(lv.at("lambda"))});
    return make_mlv(tw, j.value("base", "K"), e_base, std::move(chain));
}

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw mf_error("BadInput", "cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw mf_error("BadJson", std::string("parse error: ") + e.what());
    }
    return j;
}

inline Val val_from_json_str(const std::string& s) {
    if (s == "inf") return Val::infinity();
    return Val(rat_parse(s));
}

} // namespace mumford
