#pragma once

#include <deque>
#include <future>
#include <optional>
#include <variant>

#include "pline.hpp"

namespace mumford {

/// A generator with its paired closed discs D+(g) and D+(g^-1).
struct GenPair {
    std::string name;
    Mobius g;
    Disc plus;     // D+(g), closed inside-disc
    Disc plus_inv; // D+(g^-1)
};

/// A Schottky figure with optional Galois descent datum and subfield lattice.
struct Figure {
    TowerPtr tw;
    std::vector<GenPair> gens;
    std::vector<GaloisAuto> galois; // Galois group generators (may be empty)
    std::optional<SubfieldLattice> lattice;
};

struct CheckItem {
    std::string what;
    bool ok = false;
    std::string detail;
};

struct Report {
    bool ok = true;
    std::vector<CheckItem> items;
    void add(std::string what, bool good, std::string detail = "") {
        if (!good) ok = false;
        items.push_back({std::move(what), good, std::move(detail)});
    }
};

/// Closed discs are disjoint iff the center distance is below both radii.
inline bool discs_disjoint(const Disc& a, const Disc& b) {
    Val d = v_of(a.center - b.center);
    return d < std::min(a.vradius, b.vradius);
}

/// The 2g signed generators of a figure: (delta, D+(delta), D+(delta^-1)).
struct SignedGen {
    std::string name;
    Mobius g;
    const Disc* plus;
    const Disc* plus_inv;
    bool inverse;
};

inline std::vector<SignedGen> signed_gens(const Figure& fig) {
    std::vector<SignedGen> out;
    for (const auto& gp : fig.gens) {
        out.push_back({gp.name, gp.g, &gp.plus, &gp.plus_inv, false});
        out.push_back({gp.name + "^-1", mob_inverse(gp.g), &gp.plus_inv, &gp.plus, true});
    }
    return out;
}

/// Definition check of a Schottky figure: pairwise disjointness of the 2g
/// closed discs and, for every signed generator delta, the identity
/// delta(P1 \ D+(delta^-1)) = maximal open subdisc of D+(delta).
inline Report verify_figure(const Figure& fig, int jobs = 1) {
    Report rep;
    std::vector<const Disc*> discs;
    std::vector<std::string> dnames;
    for (const auto& gp : fig.gens) {
        discs.push_back(&gp.plus);
        dnames.push_back("D+(" + gp.name + ")");
        discs.push_back(&gp.plus_inv);
        dnames.push_back("D+(" + gp.name + "^-1)");
    }
    for (size_t i = 0; i < discs.size(); ++i)
        for (size_t j = i + 1; j < discs.size(); ++j) {
            bool ok = discs_disjoint(*discs[i], *discs[j]);
            rep.add("disjoint " + dnames[i] + " / " + dnames[j], ok,
                    ok ? "" : "v(c_i - c_j) = " + v_of(discs[i]->center - discs[j]->center).str() +
                              " >= min radius " + rat_str(std::min(discs[i]->vradius, discs[j]->vradius)));
        }

    auto check_one = [&](const SignedGen& sg) -> CheckItem {
        std::string what = "maximal-open-subdisc identity for " + sg.name;
        try {
            Disc im = image_disc_complement(sg.g, *sg.plus_inv);
            bool ok = im.vradius == sg.plus->vradius &&
                      v_of(im.center - sg.plus->center) >= im.vradius;
            return {what, ok,
                    ok ? "" : "image B(.," + rat_str(im.vradius) + ") does not match D+(" +
                              sg.name + ") radius " + rat_str(sg.plus->vradius)};
        } catch (const mf_error& e) {
            return {what, false, e.what()};
        }
    };

    auto sgs = signed_gens(fig);
    if (jobs > 1) {
        std::vector<std::future<CheckItem>> futs;
        for (const auto& sg : sgs)
            futs.push_back(std::async(std::launch::async, check_one, sg));
        for (auto& f : futs) {
            CheckItem it = f.get();
            rep.add(it.what, it.ok, it.detail);
        }
    } else {
        for (const auto& sg : sgs) {
            CheckItem it = check_one(sg);
            rep.add(it.what, it.ok, it.detail);
        }
    }
    return rep;
}

using FigPoint = std::variant<P1Point, Type2Point>;

inline bool figpoint_in_disc(const FigPoint& x, const Disc& D) {
    if (std::holds_alternative<P1Point>(x)) return point_in_disc(std::get<P1Point>(x), D);
    return type2_in_disc(std::get<Type2Point>(x), D);
}

inline FigPoint figpoint_apply(const Mobius& m, const FigPoint& x) {
    if (std::holds_alternative<P1Point>(x)) return mob_apply(m, std::get<P1Point>(x));
    return type2_image(m, std::get<Type2Point>(x));
}

inline bool figpoint_equal(const FigPoint& a, const FigPoint& b) {
    if (a.index() != b.index()) return false;
    if (std::holds_alternative<P1Point>(a))
        return std::get<P1Point>(a) == std::get<P1Point>(b);
    return type2_equal(std::get<Type2Point>(a), std::get<Type2Point>(b));
}

/// Membership in the fundamental domain
/// F = P1 \ union_i ( D-(gamma_i) cup D+(gamma_i^-1) ).
inline bool in_fundamental_domain(const Figure& fig, const FigPoint& x) {
    for (const auto& gp : fig.gens) {
        Disc dminus = gp.plus;
        dminus.closed = false; // D-(gamma) = maximal open subdisc of D+(gamma)
        if (figpoint_in_disc(x, dminus)) return false;
        if (figpoint_in_disc(x, gp.plus_inv)) return false;
    }
    return true;
}

struct Reduction {
    FigPoint point;
    std::vector<std::string> word; // original = word applied left-to-right to point
};

/// Ping-pong reduction of a point into the fundamental domain.
inline Reduction reduce_point(const Figure& fig, FigPoint x, int depth = 8) {
    std::vector<std::string> word;
    for (int step = 0; step <= depth; ++step) {
        bool moved = false;
        for (const auto& gp : fig.gens) {
            Disc dminus = gp.plus;
            dminus.closed = false;
            if (figpoint_in_disc(x, dminus)) {
                x = figpoint_apply(mob_inverse(gp.g), x);
                word.insert(word.begin(), gp.name);
                moved = true;
                break;
            }
            if (figpoint_in_disc(x, gp.plus_inv)) {
                x = figpoint_apply(gp.g, x);
                word.insert(word.begin(), gp.name + "^-1");
                moved = true;
                break;
            }
        }
        if (!moved) return Reduction{std::move(x), std::move(word)};
    }
    throw mf_error("DepthExceeded", "point did not reduce within the depth bound");
}

enum class Membership { yes, no, inconclusive };

struct MemberResult {
    Membership verdict;
    std::vector<std::string> word;
    std::string note;
};

/// Find a type-1 base point in F among small rational candidates.
inline P1Point base_point(const Figure& fig) {
    std::vector<P1Point> cands;
    for (long v : {0L, 1L, -1L, 2L, -2L, 3L})
        cands.push_back(P1Point::finite(fig.tw->from_rat(rat(v))));
    cands.push_back(P1Point::infinity(fig.tw));
    for (const auto& c : cands)
        if (in_fundamental_domain(fig, FigPoint(c))) return c;
    throw mf_error("NoBasePoint", "no rational base point in the fundamental domain");
}

/// Semi-decision of membership in the Schottky group by peeling letters:
/// a nonidentity member sends the base point into some D-(delta), and the
/// orbit of an F-point never meets a generator's fixed point.
inline MemberResult is_member(const Figure& fig, const Mobius& m, int depth = 8) {
    P1Point x0 = base_point(fig);
    auto sgs = signed_gens(fig);
    Mobius g = m;
    std::vector<std::string> word;
    for (int step = 0; step <= depth; ++step) {
        if (mob_is_identity(g)) return {Membership::yes, word, ""};
        P1Point y = mob_apply(g, x0);
        const SignedGen* hit = nullptr;
        for (const auto& sg : sgs) {
            Disc dminus = *sg.plus;
            dminus.closed = false;
            if (point_in_disc(y, dminus)) { hit = &sg; break; }
        }
        if (!hit)
            return {Membership::no, {}, "image of base point lies in no D-(delta)"};
        Mobius next = mob_compose(mob_inverse(hit->g), g);
        P1Point y2 = mob_apply(next, x0);
        if (y2 == y)
            return {Membership::no, {},
                    "orbit point is a fixed point of " + hit->name + "; not in the group"};
        word.push_back(hit->name);
        g = next;
    }
    return {Membership::inconclusive, word, "depth bound reached"};
}

struct DescentEntry {
    std::string sigma, gen;
    bool exact = false;       // exact projective identity against a signed generator
    std::string maps_to;      // name of the signed generator or word
    Membership verdict = Membership::inconclusive;
};

struct DescentReport {
    bool ok = true;
    std::vector<DescentEntry> entries;
};

/// Condition (c): every Galois conjugate of every generator lies in the group,
/// preferably as an exact projective identity.
inline DescentReport check_descent_condition_c(const Figure& fig, int depth = 8) {
    DescentReport rep;
    auto sgs = signed_gens(fig);
    for (const auto& s : fig.galois) {
        for (const auto& gp : fig.gens) {
            DescentEntry e;
            e.sigma = s.name;
            e.gen = gp.name;
            Mobius h = mob_apply_auto(s, gp.g);
            for (const auto& sg : sgs)
                if (proj_equal(h, sg.g)) {
                    e.exact = true;
                    e.maps_to = sg.name;
                    e.verdict = Membership::yes;
                    break;
                }
            if (!e.exact) {
                MemberResult mr = is_member(fig, h, depth);
                e.verdict = mr.verdict;
                std::string w;
                for (const auto& t : mr.word) w += (w.empty() ? "" : " ") + t;
                e.maps_to = w;
                if (mr.verdict != Membership::yes) rep.ok = false;
            }
            rep.entries.push_back(std::move(e));
        }
    }
    return rep;
}

/// Orbit of the D+ centers under all reduced words of length <= depth.
inline std::vector<P1Point> limit_point_sample(const Figure& fig, int depth) {
    auto sgs = signed_gens(fig);
    std::vector<P1Point> centers;
    for (const auto& gp : fig.gens) {
        centers.push_back(P1Point::finite(gp.plus.center));
        centers.push_back(P1Point::finite(gp.plus_inv.center));
    }
    std::vector<P1Point> out;
    struct Node { Mobius w; int last; int len; };
    std::deque<Node> queue;
    Mobius id{fig.tw->one(), fig.tw->zero(), fig.tw->zero(), fig.tw->one(), "id"};
    queue.push_back({id, -1, 0});
    while (!queue.empty()) {
        Node nd = queue.front();
        queue.pop_front();
        for (const auto& c : centers) out.push_back(mob_apply(nd.w, c));
        if (nd.len == depth) continue;
        for (int i = 0; i < static_cast<int>(sgs.size()); ++i) {
            if (nd.last >= 0 && (nd.last ^ 1) == i) continue; // no immediate cancellation
            queue.push_back({mob_compose(sgs[i].g, nd.w), i, nd.len + 1});
        }
    }
    return out;
}

} // namespace mumford
