#pragma once

#include <functional>
#include <map>

#include "schottky.hpp"

namespace mumford {

/// A vertex of a skeleton graph.  After gluing, `members` lists the other
/// type-2 points identified with `pt`.
struct SkVertex {
    Type2Point pt;
    bool boundary = false;
    std::vector<Type2Point> members;
    std::string def_field; // filled by annotate()
    long mult = 1;         // multiplicity over the lattice base, by annotate()
};

/// An undirected edge.  `via` records a suppressed interior point, which
/// keeps parallel edges distinguishable.  `length` is the radius difference,
/// informational only.
struct SkEdge {
    size_t u = 0, v = 0;
    std::optional<Type2Point> via;
    std::optional<Rat> length;
};

/// Record of one boundary identification made by gluing.
struct GlueRecord {
    std::string gen;
    Type2Point removed; // the boundary point eta(D+(gen^-1))
    size_t target = 0;  // surviving vertex id
};

struct Graph {
    TowerPtr tw;
    std::vector<SkVertex> verts;
    std::vector<SkEdge> edges;
    std::vector<GlueRecord> gluing;
};

inline bool vertex_matches(const SkVertex& v, const Type2Point& pt) {
    if (type2_equal(v.pt, pt)) return true;
    for (const auto& m : v.members)
        if (type2_equal(m, pt)) return true;
    return false;
}

inline std::optional<size_t> find_vertex(const Graph& g, const Type2Point& pt) {
    for (size_t i = 0; i < g.verts.size(); ++i)
        if (vertex_matches(g.verts[i], pt)) return i;
    return std::nullopt;
}

inline size_t valence(const Graph& g, size_t i) {
    size_t d = 0;
    for (const auto& e : g.edges) {
        if (e.u == i) ++d;
        if (e.v == i) ++d;
    }
    return d;
}

inline size_t component_count(const Graph& g) {
    std::vector<size_t> rep(g.verts.size());
    for (size_t i = 0; i < rep.size(); ++i) rep[i] = i;
    std::function<size_t(size_t)> find = [&](size_t x) {
        while (rep[x] != x) x = rep[x] = rep[rep[x]];
        return x;
    };
    for (const auto& e : g.edges) rep[find(e.u)] = find(e.v);
    size_t c = 0;
    for (size_t i = 0; i < rep.size(); ++i)
        if (find(i) == i) ++c;
    return c;
}

/// First Betti number E - V + C.
inline long betti(const Graph& g) {
    return static_cast<long>(g.edges.size()) - static_cast<long>(g.verts.size()) +
           static_cast<long>(component_count(g));
}

/// Convex hull of finitely many type-2 points: vertex set is the closure
/// under pairwise meet, edges are the covering relations of the containment
/// order.  The result is a tree rooted at the overall meet.
inline Graph convex_hull_tree(std::vector<Type2Point> points) {
    if (points.empty()) throw mf_error("EmptyInput", "hull of no points");
    Graph g;
    g.tw = points[0].center.tw;
    auto push_unique = [&](const Type2Point& p) {
        for (const auto& v : g.verts)
            if (type2_equal(v.pt, p)) return false;
        g.verts.push_back({p, false, {}, "", 1});
        return true;
    };
    for (const auto& p : points) {
        if (p.center.tw != g.tw) throw mf_error("TowerMismatch", "points from different towers");
        push_unique(p);
    }
    bool grew = true;
    while (grew) {
        grew = false;
        size_t k = g.verts.size();
        for (size_t i = 0; i < k; ++i)
            for (size_t j = i + 1; j < k; ++j) {
                Type2Point m = type2_meet(g.verts[i].pt, g.verts[j].pt);
                m.name = "";
                if (push_unique(m)) grew = true;
            }
    }
    // Parent of x = the point strictly below x of maximal radius.
    for (size_t i = 0; i < g.verts.size(); ++i) {
        std::optional<size_t> parent;
        for (size_t j = 0; j < g.verts.size(); ++j) {
            if (j == i) continue;
            if (!type2_leq(g.verts[j].pt, g.verts[i].pt)) continue;
            if (type2_equal(g.verts[j].pt, g.verts[i].pt)) continue;
            if (!parent || g.verts[j].pt.vradius > g.verts[*parent].pt.vradius) parent = j;
        }
        if (parent)
            g.edges.push_back({*parent, i, std::nullopt,
                               g.verts[i].pt.vradius - g.verts[*parent].pt.vradius});
    }
    return g;
}

/// Insert every interior edge point whose radius lies in (1/e)Z, so that all
/// vertices have multiplicity 1 over a field with absolute ramification e.
/// Edge paths run along the center of the larger-radius endpoint.
inline Graph subdivide_mult1(const Graph& tree, long e) {
    if (e <= 0) throw mf_error("BadIndex", "ramification index must be positive");
    Graph g;
    g.tw = tree.tw;
    g.verts = tree.verts;
    Rat step = rat(1, e);
    for (const auto& ed : tree.edges) {
        size_t lo = ed.u, hi = ed.v;
        if (g.verts[lo].pt.vradius > g.verts[hi].pt.vradius) std::swap(lo, hi);
        const Rat r0 = g.verts[lo].pt.vradius, r1 = g.verts[hi].pt.vradius;
        const FieldElement c = g.verts[hi].pt.center; // copy: push_back reallocates
        // smallest multiple of 1/e strictly above r0
        Rat t = Rat(mpz_class(r0.get_num() * e / r0.get_den()) + 1, e);
        t.canonicalize();
        size_t prev = lo;
        for (; t < r1; t += step) {
            g.verts.push_back({Type2Point{c, t, ""}, false, {}, "", 1});
            size_t idx = g.verts.size() - 1;
            g.edges.push_back({prev, idx, std::nullopt, t - g.verts[prev].pt.vradius});
            prev = idx;
        }
        g.edges.push_back({prev, hi, std::nullopt, r1 - g.verts[prev].pt.vradius});
    }
    return g;
}

/// Skeleton of the fundamental domain: hull of the 2g disc boundary points,
/// with the D+(gamma^-1) points marked as boundary (white) vertices.  When a
/// subfield lattice is attached, the tree is subdivided to multiplicity 1
/// over its top field.
inline Graph fundamental_skeleton(const Figure& fig) {
    std::vector<Type2Point> pts;
    for (const auto& gp : fig.gens) {
        pts.push_back({gp.plus.center, gp.plus.vradius, gp.plus.name});
        pts.push_back({gp.plus_inv.center, gp.plus_inv.vradius, gp.plus_inv.name});
    }
    Graph g = convex_hull_tree(pts);
    if (fig.lattice) g = subdivide_mult1(g, fig.lattice->top().e_abs);
    for (const auto& gp : fig.gens) {
        auto i = find_vertex(g, {gp.plus_inv.center, gp.plus_inv.vradius, ""});
        if (i) g.verts[*i].boundary = true;
    }
    return g;
}

/// Merge vertex `src` into `dst`, redirecting edges and collecting members.
inline void merge_vertex(Graph& g, size_t src, size_t dst) {
    if (src == dst) return;
    SkVertex& d = g.verts[dst];
    d.members.push_back(g.verts[src].pt);
    for (const auto& m : g.verts[src].members) d.members.push_back(m);
    for (auto& e : g.edges) {
        if (e.u == src) e.u = dst;
        if (e.v == src) e.v = dst;
    }
    g.verts.erase(g.verts.begin() + src);
    for (auto& e : g.edges) {
        if (e.u > src) --e.u;
        if (e.v > src) --e.v;
    }
}

/// Glue the fundamental skeleton into the Mumford skeleton: each boundary
/// vertex eta(D+(gamma^-1)) is identified with its image eta(D+(gamma)).
inline Graph glue_mumford(const Figure& fig) {
    Graph g = fundamental_skeleton(fig);
    for (const auto& gp : fig.gens) {
        Type2Point src_pt{gp.plus_inv.center, gp.plus_inv.vradius, ""};
        auto src = find_vertex(g, src_pt);
        if (!src) throw mf_error("GlueMismatch", "boundary vertex of " + gp.name + " missing");
        Type2Point img = type2_image(gp.g, g.verts[*src].pt);
        auto dst = find_vertex(g, img);
        if (!dst || *dst == *src)
            throw mf_error("GlueMismatch",
                           "gluing image of D+(" + gp.name + "^-1) matches no vertex");
        size_t s = *src, d = *dst;
        Type2Point removed = g.verts[s].pt;
        merge_vertex(g, s, d);
        size_t d2 = d > s ? d - 1 : d;
        g.verts[d2].boundary = false;
        for (auto& gr : g.gluing)
            if (gr.target > s) --gr.target;
        g.gluing.push_back({gp.name, std::move(removed), d2});
    }
    return g;
}

/// Contract to the stable shape: prune valence <= 1 vertices, then suppress
/// valence-2 vertices not carrying a loop, recording them as `via` points.
/// Both moves preserve the Betti number of what remains essential.
inline Graph stable_contraction(Graph g) {
    bool changed = true;
    while (changed) {
        changed = false;
        // prune leaves and isolated vertices (keep a lone final vertex)
        for (size_t i = 0; i < g.verts.size() && g.verts.size() > 1; ++i) {
            if (valence(g, i) > 1) continue;
            for (size_t e = g.edges.size(); e-- > 0;)
                if (g.edges[e].u == i || g.edges[e].v == i)
                    g.edges.erase(g.edges.begin() + e);
            g.verts.erase(g.verts.begin() + i);
            for (auto& e : g.edges) {
                if (e.u > i) --e.u;
                if (e.v > i) --e.v;
            }
            changed = true;
            --i;
        }
        // suppress valence-2 vertices whose two edges are distinct non-loops
        for (size_t i = 0; i < g.verts.size(); ++i) {
            std::vector<size_t> inc;
            bool has_loop = false;
            for (size_t e = 0; e < g.edges.size(); ++e) {
                if (g.edges[e].u == i && g.edges[e].v == i) has_loop = true;
                else if (g.edges[e].u == i || g.edges[e].v == i) inc.push_back(e);
            }
            if (has_loop || inc.size() != 2) continue;
            const SkEdge& e1 = g.edges[inc[0]];
            const SkEdge& e2 = g.edges[inc[1]];
            SkEdge merged;
            merged.u = e1.u == i ? e1.v : e1.u;
            merged.v = e2.u == i ? e2.v : e2.u;
            merged.via = e1.via ? e1.via : (e2.via ? e2.via : std::optional<Type2Point>(g.verts[i].pt));
            if (e1.length && e2.length) merged.length = *e1.length + *e2.length;
            g.edges.erase(g.edges.begin() + inc[1]);
            g.edges.erase(g.edges.begin() + inc[0]);
            g.edges.push_back(merged);
            g.verts.erase(g.verts.begin() + i);
            for (auto& e : g.edges) {
                if (e.u > i) --e.u;
                if (e.v > i) --e.v;
            }
            changed = true;
            break; // indices shifted; rescan
        }
    }
    return g;
}

// --- fields of definition and multiplicities ---

namespace detail {
/// Candidate centers in subfield F: p^j * (products of <= 2 generators) plus
/// small integer shifts.  Bounded, deterministic search.
inline std::vector<FieldElement> center_candidates(TowerPtr tw, const Subfield& F) {
    std::vector<FieldElement> mons{tw->one()};
    for (const auto& a : F.gens) mons.push_back(a);
    for (size_t i = 0; i < F.gens.size(); ++i)
        for (size_t j = i; j < F.gens.size(); ++j)
            mons.push_back(F.gens[i] * F.gens[j]);
    std::vector<FieldElement> out;
    Rat p(tw->p);
    for (const auto& m : mons)
        for (int j = -1; j <= 1; ++j) {
            Rat pj = j == 0 ? Rat(1) : (j == 1 ? p : Rat(1) / p);
            for (long s = -2; s <= 2; ++s)
                out.push_back(pj * m + tw->from_rat(Rat(s)));
        }
    for (long s = -2; s <= 2; ++s) out.push_back(tw->from_rat(Rat(s)));
    return out;
}
} // namespace detail

/// Least n >= 1 with n*r in v(F^x), i.e. the denominator of r*e(F).
inline long multiplicity_over(const Type2Point& pt, const Subfield& F) {
    Rat q = pt.vradius * Rat(F.e_abs);
    q.canonicalize();
    return rat_denominator_long(q);
}

/// The minimal lattice field M with the point expressible as eta_{a,r},
/// a in M and r in v(M^x), allowing equal-point center rewrites.  Fields are
/// ordered by degree over the base, ties broken by lattice order.
inline size_t field_of_definition_index(const Type2Point& pt, const SubfieldLattice& lat) {
    std::vector<size_t> order(lat.fields.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](size_t a, size_t b) { return lat.fields[a].dim < lat.fields[b].dim; });
    for (size_t idx : order) {
        const Subfield& F = lat.fields[idx];
        if (multiplicity_over(pt, F) != 1) continue;
        if (subfield_contains(F, pt.center)) return idx;
        for (const auto& c : detail::center_candidates(lat.tw, F)) {
            if (!subfield_contains(F, c)) continue;
            if (v_of(c - pt.center) >= pt.vradius) return idx;
        }
    }
    throw mf_error("NotDefinedOverLattice", "no lattice field defines the point");
}

inline std::string field_of_definition(const Type2Point& pt, const SubfieldLattice& lat) {
    return lat.fields[field_of_definition_index(pt, lat)].name;
}

/// Divisor bound on the quotient multiplicity: [M:K] for the field of
/// definition M.  A bound, not an exact value.
inline long quotient_multiplicity_bound(const Type2Point& pt, const SubfieldLattice& lat) {
    return lat.degree_over_base(field_of_definition_index(pt, lat));
}

/// Fill def_field and multiplicity-over-base annotations.
inline void annotate(Graph& g, const SubfieldLattice& lat) {
    for (auto& v : g.verts) {
        v.def_field = field_of_definition(v.pt, lat);
        v.mult = multiplicity_over(v.pt, lat.base());
    }
}

/// Blow down every vertex defined only over the top field L (edge contraction
/// toward a neighbor, preferring one not itself L-only).
inline Graph contract_L_only(Graph g, const SubfieldLattice& lat) {
    const std::string top = lat.top().name;
    auto is_top = [&](size_t i) { return field_of_definition(g.verts[i].pt, lat) == top; };
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < g.verts.size(); ++i) {
            if (!is_top(i)) continue;
            std::optional<size_t> target, target_edge;
            for (size_t e = 0; e < g.edges.size(); ++e) {
                if (g.edges[e].u == g.edges[e].v) continue;
                size_t other;
                if (g.edges[e].u == i) other = g.edges[e].v;
                else if (g.edges[e].v == i) other = g.edges[e].u;
                else continue;
                if (!target || (is_top(*target) && !is_top(other))) {
                    target = other;
                    target_edge = e;
                }
            }
            if (!target) {
                // isolated top-field vertex: drop it
                g.verts.erase(g.verts.begin() + i);
                for (auto& e : g.edges) {
                    if (e.u > i) --e.u;
                    if (e.v > i) --e.v;
                }
            } else {
                g.edges.erase(g.edges.begin() + *target_edge);
                merge_vertex(g, i, *target > i ? *target - 1 : *target);
            }
            changed = true;
            break;
        }
    }
    return g;
}

// --- Galois action ---

struct OrbitWitness {
    std::string element;
    bool moved = false;
    std::string kind; // "vertex" or "edge"
    std::string what;
};

struct OrbitReport {
    std::vector<std::vector<size_t>> vertex_orbits;
    std::vector<std::vector<size_t>> edge_orbits;
    std::vector<OrbitWitness> faithfulness; // one per nontrivial group element
    bool faithful = true;
    Graph quotient;
};

namespace detail {
inline size_t resolve_vertex(const Graph& g, const Figure& fig, Type2Point img, int depth) {
    if (auto i = find_vertex(g, img)) return *i;
    Reduction red = reduce_point(fig, FigPoint(img), depth);
    const Type2Point& r = std::get<Type2Point>(red.point);
    if (auto i = find_vertex(g, r)) return *i;
    throw mf_error("OrbitUnresolved", "Galois image matches no vertex, even after reduction");
}

inline size_t resolve_edge(const Graph& g, size_t u, size_t v,
                           const std::optional<Type2Point>& via) {
    std::vector<size_t> cands;
    for (size_t e = 0; e < g.edges.size(); ++e) {
        const SkEdge& ed = g.edges[e];
        if ((ed.u == u && ed.v == v) || (ed.u == v && ed.v == u)) cands.push_back(e);
    }
    if (cands.empty()) throw mf_error("OrbitUnresolved", "Galois image of an edge is missing");
    if (via) {
        // prefer the candidate whose via lies on the same branch, i.e. the two
        // via discs are nested
        for (size_t e : cands) {
            const auto& w = g.edges[e].via;
            if (!w) continue;
            if (v_of(w->center - via->center) >= std::min(w->vradius, via->vradius)) return e;
        }
    }
    return cands[0];
}
} // namespace detail

/// Action of the Galois group (closure of fig.galois) on a skeleton graph:
/// orbit partitions of vertices and edges, a faithfulness witness per
/// nontrivial element, and the quotient graph.
inline OrbitReport galois_orbits(const Graph& g, const Figure& fig, int depth = 8) {
    OrbitReport rep;
    std::vector<GaloisAuto> grp = group_closure(fig.tw, fig.galois);

    std::vector<std::vector<size_t>> vperm, eperm;
    for (const auto& s : grp) {
        std::vector<size_t> vp(g.verts.size()), ep(g.edges.size());
        for (size_t i = 0; i < g.verts.size(); ++i) {
            Type2Point img{apply_auto(s, g.verts[i].pt.center), g.verts[i].pt.vradius, ""};
            vp[i] = detail::resolve_vertex(g, fig, img, depth);
        }
        for (size_t e = 0; e < g.edges.size(); ++e) {
            std::optional<Type2Point> via;
            if (g.edges[e].via)
                via = Type2Point{apply_auto(s, g.edges[e].via->center),
                                 g.edges[e].via->vradius, ""};
            ep[e] = detail::resolve_edge(g, vp[g.edges[e].u], vp[g.edges[e].v], via);
        }
        vperm.push_back(std::move(vp));
        eperm.push_back(std::move(ep));
    }

    auto orbits_of = [&](size_t count, const std::vector<std::vector<size_t>>& perms) {
        std::vector<std::vector<size_t>> orbs;
        std::vector<bool> seen(count, false);
        for (size_t i = 0; i < count; ++i) {
            if (seen[i]) continue;
            std::vector<size_t> orb{i};
            seen[i] = true;
            for (size_t q = 0; q < orb.size(); ++q)
                for (const auto& pm : perms) {
                    size_t j = pm[orb[q]];
                    if (!seen[j]) {
                        seen[j] = true;
                        orb.push_back(j);
                    }
                }
            orbs.push_back(std::move(orb));
        }
        return orbs;
    };
    rep.vertex_orbits = orbits_of(g.verts.size(), vperm);
    rep.edge_orbits = orbits_of(g.edges.size(), eperm);

    for (size_t k = 1; k < grp.size(); ++k) { // skip identity at index 0
        OrbitWitness w;
        w.element = grp[k].name;
        for (size_t i = 0; i < g.verts.size() && !w.moved; ++i)
            if (vperm[k][i] != i) {
                w.moved = true;
                w.kind = "vertex";
                w.what = g.verts[i].pt.name.empty() ? "vertex " + std::to_string(i)
                                                    : g.verts[i].pt.name;
            }
        for (size_t e = 0; e < g.edges.size() && !w.moved; ++e)
            if (eperm[k][e] != e) {
                w.moved = true;
                w.kind = "edge";
                w.what = "edge " + std::to_string(g.edges[e].u) + "-" +
                         std::to_string(g.edges[e].v);
            }
        if (!w.moved) rep.faithful = false;
        rep.faithfulness.push_back(std::move(w));
    }

    // quotient graph: orbit representatives
    std::vector<size_t> vclass(g.verts.size());
    for (size_t o = 0; o < rep.vertex_orbits.size(); ++o)
        for (size_t i : rep.vertex_orbits[o]) vclass[i] = o;
    rep.quotient.tw = g.tw;
    for (const auto& orb : rep.vertex_orbits) rep.quotient.verts.push_back(g.verts[orb[0]]);
    for (const auto& orb : rep.edge_orbits) {
        const SkEdge& e = g.edges[orb[0]];
        rep.quotient.edges.push_back({vclass[e.u], vclass[e.v], e.via, e.length});
    }
    return rep;
}

struct StabilizationResult {
    long m = 1;
    long degree_L_over_K = 1;
    bool divides = false;
    bool strict_gap = false;
    std::vector<std::pair<std::string, long>> per_vertex; // (field, bound)
};

/// m = lcm of per-vertex quotient multiplicity bounds; the verdict records
/// whether m divides [L:K] and whether the inequality is strict.
inline StabilizationResult stabilization_bound(const Graph& g, const SubfieldLattice& lat) {
    StabilizationResult res;
    for (const auto& v : g.verts) {
        long b = quotient_multiplicity_bound(v.pt, lat);
        res.per_vertex.push_back({field_of_definition(v.pt, lat), b});
        res.m = lcm_long(res.m, b);
    }
    res.degree_L_over_K = lat.degree_over_base(lat.top_index());
    res.divides = res.degree_L_over_K % res.m == 0;
    res.strict_gap = res.divides && res.m < res.degree_L_over_K;
    return res;
}

} // namespace mumford
