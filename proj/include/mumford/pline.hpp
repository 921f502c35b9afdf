#pragma once

#include "field.hpp"

namespace mumford {

/// A type-1 point of the projective line: a field element or infinity.
struct P1Point {
    bool at_inf = false;
    FieldElement x; // meaningful iff !at_inf

    static P1Point infinity(TowerPtr tw) { return {true, tw->zero()}; }
    static P1Point finite(FieldElement e) { return {false, std::move(e)}; }

    friend bool operator==(const P1Point& a, const P1Point& b) {
        if (a.at_inf || b.at_inf) return a.at_inf && b.at_inf;
        return a.x == b.x;
    }
};

/// A disc in P1.  With side=inside the set is {v(x-center) >= r} (closed) or
/// {v(x-center) > r} (open); with side=complement it is the complement of that
/// set, which contains infinity.
struct Disc {
    FieldElement center;
    Rat vradius;
    bool closed = true;
    bool complement = false;
    std::string name;
};

/// The sup-norm point of the closed disc B(center, vradius).
struct Type2Point {
    FieldElement center;
    Rat vradius;
    std::string name;
};

/// An element of PGL2: a 2x2 matrix up to scalar.
struct Mobius {
    FieldElement a, b, c, d;
    std::string name;
};

inline FieldElement mob_det(const Mobius& m) { return m.a * m.d - m.b * m.c; }

inline Mobius mob_inverse(const Mobius& m) {
    return Mobius{m.d, -m.b, -m.c, m.a, m.name.empty() ? "" : m.name + "^-1"};
}

inline Mobius mob_compose(const Mobius& f, const Mobius& g) {
    return Mobius{f.a * g.a + f.b * g.c, f.a * g.b + f.b * g.d,
                  f.c * g.a + f.d * g.c, f.c * g.b + f.d * g.d, ""};
}

inline Mobius mob_apply_auto(const GaloisAuto& s, const Mobius& m) {
    return Mobius{apply_auto(s, m.a), apply_auto(s, m.b),
                  apply_auto(s, m.c), apply_auto(s, m.d), ""};
}

/// Projective equality: proportional matrices.
inline bool proj_equal(const Mobius& m1, const Mobius& m2) {
    // Cross-products of all entry pairs must agree.
    const FieldElement* u[4] = {&m1.a, &m1.b, &m1.c, &m1.d};
    const FieldElement* w[4] = {&m2.a, &m2.b, &m2.c, &m2.d};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (*u[i] * *w[j] != *u[j] * *w[i]) return false;
    // Exclude the zero matrix pathology; both are assumed invertible anyway.
    return true;
}

inline bool mob_is_identity(const Mobius& m) {
    return m.b.is_zero() && m.c.is_zero() && !m.a.is_zero() && m.a == m.d;
}

inline P1Point mob_apply(const Mobius& m, const P1Point& x) {
    TowerPtr tw = m.a.tw;
    if (x.at_inf) {
        if (m.c.is_zero()) return P1Point::infinity(tw);
        return P1Point::finite(m.a / m.c);
    }
    FieldElement den = m.c * x.x + m.d;
    if (den.is_zero()) return P1Point::infinity(tw);
    return P1Point::finite((m.a * x.x + m.b) / den);
}

/// Membership of a type-1 point in a disc.
inline bool point_in_disc(const P1Point& x, const Disc& D) {
    bool in_core;
    if (x.at_inf) {
        in_core = false;
    } else {
        Val d = v_of(x.x - D.center);
        in_core = D.closed ? d >= D.vradius : d > D.vradius;
    }
    return D.complement ? !in_core : in_core;
}

/// Membership of a type-2 point eta_{a,r}: the sup-norm satisfies
/// v_eta(T - c) = min(v(a-c), r), so eta lies in the disc iff that value
/// clears the radius; complement membership is the negation.
inline bool type2_in_disc(const Type2Point& e, const Disc& D) {
    Val d = val_min(v_of(e.center - D.center), Val(e.vradius));
    bool core = D.closed ? d >= D.vradius : d > D.vradius;
    return D.complement ? !core : core;
}

// --- type-2 point lattice operations ---

inline bool type2_equal(const Type2Point& e1, const Type2Point& e2) {
    if (e1.vradius != e2.vradius) return false;
    return v_of(e1.center - e2.center) >= e1.vradius;
}

/// e1 precedes e2 iff the disc of e2 is contained in the disc of e1.
inline bool type2_leq(const Type2Point& e1, const Type2Point& e2) {
    return e1.vradius <= e2.vradius && v_of(e1.center - e2.center) >= e1.vradius;
}

inline Type2Point type2_meet(const Type2Point& e1, const Type2Point& e2) {
    Val d = v_of(e1.center - e2.center);
    Rat r = std::min(e1.vradius, e2.vradius);
    if (d < r) r = d.finite();
    return Type2Point{e1.center, r, e1.name};
}

// --- Mobius images of discs ---

/// Image of a closed inside-disc.  Pole strictly outside gives a closed disc;
/// pole strictly inside gives the complement of an open disc around gamma(inf).
inline Disc image_closed_disc(const Mobius& m, const Disc& D) {
    if (!D.closed || D.complement)
        throw mf_error("BadDisc", "image_closed_disc expects a closed inside-disc");
    TowerPtr tw = D.center.tw;
    FieldElement det = mob_det(m);
    if (det.is_zero()) throw mf_error("SingularMatrix", "Mobius with zero determinant");
    if (m.c.is_zero()) {
        FieldElement ctr = (m.a * D.center + m.b) / m.d;
        Rat r = D.vradius + (v_of(m.a) - v_of(m.d)).finite();
        return Disc{ctr, r, true, false, D.name};
    }
    FieldElement pole = -(m.d / m.c);
    Val t = v_of(D.center - pole);
    if (t > D.vradius) {
        // pole strictly inside: image is the complement of the open disc
        // {v(w - gamma(inf)) > R}.
        Rat R = (v_of(det) - (v_of(m.c) + v_of(m.c))).finite() - D.vradius;
        return Disc{m.a / m.c, R, false, true, D.name};
    }
    if (t < D.vradius) {
        FieldElement ctr = mob_apply(m, P1Point::finite(D.center)).x;
        Val denv = v_of(m.c * D.center + m.d);
        Rat r = D.vradius + (v_of(det) - denv - denv).finite();
        return Disc{ctr, r, true, false, D.name};
    }
    throw mf_error("PoleOnBoundary", "pole on the boundary sphere; image is not a disc");
}

/// Image of the complement of a closed inside-disc, when the pole lies
/// strictly inside: the open disc B(gamma(inf), v(det) - 2 v(c) - r).
inline Disc image_disc_complement(const Mobius& m, const Disc& D) {
    if (!D.closed || D.complement)
        throw mf_error("BadDisc", "image_disc_complement expects a closed inside-disc");
    FieldElement det = mob_det(m);
    if (det.is_zero()) throw mf_error("SingularMatrix", "Mobius with zero determinant");
    if (m.c.is_zero())
        throw mf_error("PoleNotInside", "affine map: pole at infinity is not inside");
    FieldElement pole = -(m.d / m.c);
    Val t = v_of(D.center - pole);
    if (!(t > D.vradius))
        throw mf_error("PoleNotInside", "pole of the map is not strictly inside the disc");
    Rat R = (v_of(det) - (v_of(m.c) + v_of(m.c))).finite() - D.vradius;
    return Disc{m.a / m.c, R, false, false, D.name};
}

/// Image of a type-2 point, i.e. of the Gauss point of its closed disc.
/// Handles the pole strictly inside via the complement image; only a pole on
/// the boundary sphere is an error.
inline Type2Point type2_image(const Mobius& m, const Type2Point& e) {
    Disc D{e.center, e.vradius, true, false, e.name};
    if (!m.c.is_zero()) {
        FieldElement pole = -(m.d / m.c);
        Val t = v_of(e.center - pole);
        if (t == Val(e.vradius))
            throw mf_error("PoleOnBoundary", "pole on the boundary sphere of the point's disc");
        if (t > e.vradius) {
            Disc im = image_disc_complement(m, D);
            return Type2Point{im.center, im.vradius, e.name};
        }
    }
    Disc im = image_closed_disc(m, D);
    return Type2Point{im.center, im.vradius, e.name};
}

} // namespace mumford
