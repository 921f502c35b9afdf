#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <random>
#include <vector>

#include "rational.hpp"

namespace mumford {

class FieldTower;
using TowerPtr = std::shared_ptr<const FieldTower>;

/// An element of a field tower, stored as an exact coordinate vector in the
/// product power basis (innermost generator varies fastest).
struct FieldElement {
    TowerPtr tw;
    std::vector<Rat> c;

    bool is_zero() const {
        for (const auto& x : c) if (x != 0) return false;
        return true;
    }
    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.c == b.c;
    }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }
};

/// A tower of finite extensions of Q carrying the p-adic valuation, assumed
/// (and spot-checked) to extend uniquely to the top level.  Valuations are
/// stored in the absolute normalization v(p) = 1.
class FieldTower : public std::enable_shared_from_this<FieldTower> {
public:
    struct Step {
        std::string name;
        // Non-leading minimal-polynomial coefficients c0..c_{deg-1}; each is a
        // coordinate vector over the previous level.  The polynomial is monic.
        std::vector<std::vector<Rat>> minpoly;
        size_t deg = 0;
    };

    Int p;
    std::vector<Step> steps;
    bool certificate = false;
    std::vector<size_t> level_dim; // level_dim[k] = dimension of level k; level 0 is Q
    size_t n = 1;                  // total degree

    static TowerPtr build(Int prime, std::vector<Step> sts, bool cert,
                          std::uint64_t seed = 0xC0FFEEu) {
        auto tw = std::shared_ptr<FieldTower>(new FieldTower());
        tw->p = std::move(prime);
        if (tw->p < 2) throw mf_error("BadPrime", "prime must be >= 2");
        tw->steps = std::move(sts);
        tw->certificate = cert;
        tw->level_dim.assign(1, 1);
        for (auto& s : tw->steps) {
            s.deg = s.minpoly.size();
            if (s.deg < 2)
                throw mf_error("NonMonicOrSmall", "step '" + s.name + "' must have degree >= 2");
            size_t prev = tw->level_dim.back();
            for (const auto& co : s.minpoly)
                if (co.size() != prev)
                    throw mf_error("BadCoefficient",
                                   "step '" + s.name + "' coefficient length mismatch");
            tw->level_dim.push_back(prev * s.deg);
        }
        tw->n = tw->level_dim.back();
        tw->spot_check(seed);
        return tw;
    }

    size_t depth() const { return steps.size(); }

    FieldElement zero() const { return {shared_from_this(), std::vector<Rat>(n)}; }
    FieldElement from_rat(const Rat& q) const {
        FieldElement e = zero();
        e.c[0] = q;
        return e;
    }
    FieldElement one() const { return from_rat(1); }
    /// Generator of step k (0-based).
    FieldElement gen(size_t k) const {
        if (k >= steps.size()) throw mf_error("BadIndex", "no such generator");
        FieldElement e = zero();
        e.c[level_dim[k]] = 1;
        return e;
    }
    FieldElement from_coords(std::vector<Rat> co) const {
        if (co.size() != n) throw mf_error("BadCoefficient", "coordinate length mismatch");
        return {shared_from_this(), std::move(co)};
    }
    FieldElement gen_by_name(const std::string& nm) const {
        for (size_t k = 0; k < steps.size(); ++k)
            if (steps[k].name == nm) return gen(k);
        throw mf_error("BadIndex", "no generator named '" + nm + "'");
    }

    // --- arithmetic ---

    FieldElement add(const FieldElement& a, const FieldElement& b) const {
        check_same(a, b);
        FieldElement r = a;
        for (size_t i = 0; i < n; ++i) r.c[i] += b.c[i];
        return r;
    }
    FieldElement sub(const FieldElement& a, const FieldElement& b) const {
        check_same(a, b);
        FieldElement r = a;
        for (size_t i = 0; i < n; ++i) r.c[i] -= b.c[i];
        return r;
    }
    FieldElement neg(const FieldElement& a) const {
        FieldElement r = a;
        for (size_t i = 0; i < n; ++i) r.c[i] = -r.c[i];
        return r;
    }
    FieldElement mul(const FieldElement& a, const FieldElement& b) const {
        check_same(a, b);
        FieldElement r = zero();
        mul_level(depth(), a.c.data(), b.c.data(), r.c.data());
        return r;
    }
    FieldElement scale(const FieldElement& a, const Rat& q) const {
        FieldElement r = a;
        for (size_t i = 0; i < n; ++i) r.c[i] *= q;
        return r;
    }

    /// Multiplicative inverse via the multiplication matrix.
    FieldElement inv(const FieldElement& a) const {
        if (a.is_zero()) throw mf_error("DivisionByZero", "inverse of zero");
        std::vector<std::vector<Rat>> m = mult_matrix(a);
        std::vector<Rat> rhs(n);
        rhs[0] = 1;
        std::vector<Rat> sol = solve(m, rhs);
        return from_coords(std::move(sol));
    }

    /// Determinant of the multiplication-by-x matrix.
    Rat norm(const FieldElement& a) const {
        if (a.is_zero()) return Rat(0);
        std::vector<std::vector<Rat>> m = mult_matrix(a);
        return det(std::move(m));
    }

    /// v(x) = v_p(norm(x)) / n, absolute normalization v(p)=1.
    Val valuation(const FieldElement& a) const {
        if (!certificate)
            throw mf_error("CertificateAbsent", "tower has no unique-extension certificate");
        if (a.is_zero()) return Val::infinity();
        Val vn = vp_rat(norm(a), p);
        return Val(vn.finite() / Rat(static_cast<long>(n)));
    }

    /// Horner evaluation of a polynomial given by non-leading coefficients
    /// (monic, as stored in a Step) at a full-tower element.
    FieldElement eval_monic(const std::vector<FieldElement>& coeffs, const FieldElement& x) const {
        FieldElement r = one(); // leading coefficient
        for (size_t i = coeffs.size(); i-- > 0;) r = add(mul(r, x), coeffs[i]);
        return r;
    }

    /// Lift a level-k coordinate chunk to a full-tower element.
    FieldElement lift(size_t k, const std::vector<Rat>& chunk) const {
        FieldElement e = zero();
        for (size_t i = 0; i < chunk.size() && i < n; ++i) e.c[i] = chunk[i];
        (void)k;
        return e;
    }

private:
    FieldTower() = default;

    void check_same(const FieldElement& a, const FieldElement& b) const {
        if (a.tw.get() != this || b.tw.get() != this)
            throw mf_error("TowerMismatch", "elements from different towers");
    }

    // Multiply two level-k chunks of size level_dim[k]; accumulates into out.
    void mul_level(size_t k, const Rat* a, const Rat* b, Rat* out) const {
        if (k == 0) {
            out[0] += a[0] * b[0];
            return;
        }
        const Step& st = steps[k - 1];
        const size_t d = st.deg, m = level_dim[k - 1];
        std::vector<Rat> prod((2 * d - 1) * m);
        for (size_t i = 0; i < d; ++i)
            for (size_t j = 0; j < d; ++j)
                mul_level(k - 1, a + i * m, b + j * m, prod.data() + (i + j) * m);
        std::vector<Rat> tmp(m);
        for (size_t t = 2 * d - 2; t >= d; --t) {
            Rat* top = prod.data() + t * m;
            bool nz = false;
            for (size_t u = 0; u < m; ++u)
                if (top[u] != 0) { nz = true; break; }
            if (nz) {
                for (size_t i = 0; i < d; ++i) {
                    std::fill(tmp.begin(), tmp.end(), Rat(0));
                    mul_level(k - 1, top, st.minpoly[i].data(), tmp.data());
                    Rat* dst = prod.data() + (t - d + i) * m;
                    for (size_t u = 0; u < m; ++u) dst[u] -= tmp[u];
                }
            }
            if (t == d) break;
        }
        for (size_t u = 0; u < d * m; ++u) out[u] += prod[u];
    }

    std::vector<std::vector<Rat>> mult_matrix(const FieldElement& a) const {
        std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
        FieldElement basis = zero();
        for (size_t j = 0; j < n; ++j) {
            basis.c.assign(n, Rat(0));
            basis.c[j] = 1;
            FieldElement col = zero();
            mul_level(depth(), a.c.data(), basis.c.data(), col.c.data());
            for (size_t i = 0; i < n; ++i) m[i][j] = col.c[i];
        }
        return m;
    }

    static Rat det(std::vector<std::vector<Rat>> m) {
        const size_t k = m.size();
        Rat d(1);
        for (size_t col = 0; col < k; ++col) {
            size_t piv = col;
            while (piv < k && m[piv][col] == 0) ++piv;
            if (piv == k) return Rat(0);
            if (piv != col) { std::swap(m[piv], m[col]); d = -d; }
            d *= m[col][col];
            Rat inv_piv = 1 / m[col][col];
            for (size_t r = col + 1; r < k; ++r) {
                if (m[r][col] == 0) continue;
                Rat f = m[r][col] * inv_piv;
                for (size_t cc = col; cc < k; ++cc) m[r][cc] -= f * m[col][cc];
            }
        }
        return d;
    }

    static std::vector<Rat> solve(std::vector<std::vector<Rat>> m, std::vector<Rat> rhs) {
        const size_t k = m.size();
        for (size_t col = 0; col < k; ++col) {
            size_t piv = col;
            while (piv < k && m[piv][col] == 0) ++piv;
            if (piv == k) throw mf_error("SingularMatrix", "singular multiplication matrix");
            std::swap(m[piv], m[col]);
            std::swap(rhs[piv], rhs[col]);
            Rat inv_piv = 1 / m[col][col];
            for (size_t cc = col; cc < k; ++cc) m[col][cc] *= inv_piv;
            rhs[col] *= inv_piv;
            for (size_t r = 0; r < k; ++r) {
                if (r == col || m[r][col] == 0) continue;
                Rat f = m[r][col];
                for (size_t cc = col; cc < k; ++cc) m[r][cc] -= f * m[col][cc];
                rhs[r] -= f * rhs[col];
            }
        }
        return rhs;
    }

    // Construction-time sanity: associativity on random triples; if the
    // certificate is set, the ultrametric inequality on random pairs.
    void spot_check(std::uint64_t seed) const {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> coef(-5, 5);
        auto rnd = [&]() {
            FieldElement e = zero_raw();
            for (size_t i = 0; i < n; ++i) e.c[i] = Rat(coef(rng));
            return e;
        };
        for (int it = 0; it < 5; ++it) {
            FieldElement x = rnd(), y = rnd(), z = rnd();
            FieldElement l = raw_mul(raw_mul(x, y), z);
            FieldElement r = raw_mul(x, raw_mul(y, z));
            if (l.c != r.c)
                throw mf_error("InconsistentTable", "associativity spot check failed");
        }
        if (certificate) {
            for (int it = 0; it < 30; ++it) {
                FieldElement x = rnd(), y = rnd();
                if (x.is_zero() || y.is_zero()) continue;
                FieldElement s = x;
                for (size_t i = 0; i < n; ++i) s.c[i] += y.c[i];
                Val vx = raw_val(x), vy = raw_val(y), vs = raw_val(s);
                if (vs < val_min(vx, vy))
                    throw mf_error("CertificateCheckFailed",
                                   "ultrametric inequality violated; valuation does not extend uniquely");
            }
        }
    }

    FieldElement zero_raw() const { return {nullptr, std::vector<Rat>(n)}; }
    FieldElement raw_mul(const FieldElement& a, const FieldElement& b) const {
        FieldElement r = zero_raw();
        mul_level(depth(), a.c.data(), b.c.data(), r.c.data());
        return r;
    }
    Val raw_val(const FieldElement& a) const {
        if (a.is_zero()) return Val::infinity();
        std::vector<std::vector<Rat>> m = mult_matrix_raw(a);
        Rat nm = det(std::move(m));
        if (nm == 0) return Val::infinity();
        return Val(vp_rat(nm, p).finite() / Rat(static_cast<long>(n)));
    }
    std::vector<std::vector<Rat>> mult_matrix_raw(const FieldElement& a) const {
        std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
        FieldElement basis = zero_raw();
        for (size_t j = 0; j < n; ++j) {
            basis.c.assign(n, Rat(0));
            basis.c[j] = 1;
            FieldElement col = zero_raw();
            mul_level(depth(), a.c.data(), basis.c.data(), col.c.data());
            for (size_t i = 0; i < n; ++i) m[i][j] = col.c[i];
        }
        return m;
    }
};

// Operator sugar; all checks happen in the tower methods.
inline FieldElement operator+(const FieldElement& a, const FieldElement& b) { return a.tw->add(a, b); }
inline FieldElement operator-(const FieldElement& a, const FieldElement& b) { return a.tw->sub(a, b); }
inline FieldElement operator*(const FieldElement& a, const FieldElement& b) { return a.tw->mul(a, b); }
inline FieldElement operator-(const FieldElement& a) { return a.tw->neg(a); }
inline FieldElement operator*(const Rat& q, const FieldElement& a) { return a.tw->scale(a, q); }
inline FieldElement inv(const FieldElement& a) { return a.tw->inv(a); }
inline FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * inv(b); }
inline Val v_of(const FieldElement& a) { return a.tw->valuation(a); }
inline FieldElement fe_pow(FieldElement a, long e) {
    auto tw = a.tw;
    if (e < 0) { a = inv(a); e = -e; }
    FieldElement r = tw->one();
    while (e > 0) {
        if (e & 1) r = r * a;
        a = a * a;
        e >>= 1;
    }
    return r;
}

/// A field automorphism of the tower, given by the images of the step
/// generators.  Validated to be a ring homomorphism at construction.
struct GaloisAuto {
    std::string name;
    TowerPtr tw;
    std::vector<FieldElement> images; // one per step
};

inline FieldElement apply_auto(const GaloisAuto& g, const FieldElement& x);

namespace detail {
inline FieldElement apply_level(const GaloisAuto& g, size_t k, const Rat* a) {
    const FieldTower& tw = *g.tw;
    if (k == 0) return tw.from_rat(a[0]);
    const size_t d = tw.steps[k - 1].deg, m = tw.level_dim[k - 1];
    FieldElement res = tw.zero();
    FieldElement pw = tw.one();
    for (size_t j = 0; j < d; ++j) {
        res = res + apply_level(g, k - 1, a + j * m) * pw;
        if (j + 1 < d) pw = pw * g.images[k - 1];
    }
    return res;
}
} // namespace detail

inline FieldElement apply_auto(const GaloisAuto& g, const FieldElement& x) {
    if (x.tw != g.tw) throw mf_error("TowerMismatch", "automorphism from different tower");
    return detail::apply_level(g, g.tw->depth(), x.c.data());
}

/// Build and validate an automorphism: each generator image must satisfy that
/// generator's minimal polynomial with the map applied to the coefficients.
inline GaloisAuto make_auto(std::string name, TowerPtr tw, std::vector<FieldElement> images) {
    if (images.size() != tw->depth())
        throw mf_error("BadAutomorphism", "need one image per tower step");
    GaloisAuto g{std::move(name), tw, std::move(images)};
    for (size_t k = 0; k < tw->depth(); ++k) {
        const auto& st = tw->steps[k];
        std::vector<FieldElement> mapped;
        mapped.reserve(st.deg);
        for (const auto& co : st.minpoly) {
            FieldElement lifted = tw->lift(k, co);
            mapped.push_back(apply_auto(g, lifted));
        }
        FieldElement r = tw->eval_monic(mapped, g.images[k]);
        if (!r.is_zero())
            throw mf_error("BadAutomorphism",
                           "image of '" + st.name + "' does not satisfy its minimal polynomial");
    }
    return g;
}

inline GaloisAuto identity_auto(TowerPtr tw) {
    std::vector<FieldElement> imgs;
    for (size_t k = 0; k < tw->depth(); ++k) imgs.push_back(tw->gen(k));
    return GaloisAuto{"id", tw, std::move(imgs)};
}

inline bool auto_equal(const GaloisAuto& a, const GaloisAuto& b) {
    if (a.images.size() != b.images.size()) return false;
    for (size_t i = 0; i < a.images.size(); ++i)
        if (a.images[i] != b.images[i]) return false;
    return true;
}

/// a after b.
inline GaloisAuto compose_auto(const GaloisAuto& a, const GaloisAuto& b) {
    std::vector<FieldElement> imgs;
    imgs.reserve(b.images.size());
    for (const auto& im : b.images) imgs.push_back(apply_auto(a, im));
    std::string nm = b.name == "id" ? a.name : (a.name == "id" ? b.name : a.name + "*" + b.name);
    return GaloisAuto{std::move(nm), a.tw, std::move(imgs)};
}

/// Closure of a generating set under composition (small groups only).
inline std::vector<GaloisAuto> group_closure(TowerPtr tw, const std::vector<GaloisAuto>& gens,
                                             size_t limit = 64) {
    std::vector<GaloisAuto> grp{identity_auto(tw)};
    bool grew = true;
    while (grew) {
        grew = false;
        for (size_t i = 0; i < grp.size(); ++i)
            for (const auto& g : gens) {
                GaloisAuto c = compose_auto(g, grp[i]);
                bool found = false;
                for (const auto& h : grp)
                    if (auto_equal(c, h)) { found = true; break; }
                if (!found) {
                    if (grp.size() >= limit)
                        throw mf_error("GroupTooLarge", "Galois closure exceeds limit");
                    grp.push_back(c);
                    grew = true;
                }
            }
    }
    return grp;
}

/// e(F) = lcm of valuation denominators over the supplied generators plus
/// v(p)=1, i.e. the least e with all generator valuations in (1/e)Z.
inline long ramification_index(const std::vector<FieldElement>& gens) {
    if (gens.empty()) throw mf_error("EmptyGenerators", "ramification index of empty set");
    long e = 1;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        Val v = v_of(g);
        e = lcm_long(e, rat_denominator_long(v.finite()));
    }
    return e;
}

/// A named subfield given by generators, with its Q-span basis (row echelon),
/// dimension, and absolute ramification index of the supplied generators.
struct Subfield {
    std::string name;
    std::vector<FieldElement> gens;
    std::vector<std::vector<Rat>> basis; // echelon rows, pivots increasing
    std::vector<size_t> pivots;
    size_t dim = 0;
    long e_abs = 1;
};

namespace detail {
// Reduce v against echelon rows; returns true (and updates rows) if v was
// independent.  Rows are kept in echelon form with unit pivots.
inline bool echelon_insert(std::vector<std::vector<Rat>>& rows, std::vector<size_t>& pivots,
                           std::vector<Rat> v) {
    for (size_t r = 0; r < rows.size(); ++r) {
        if (v[pivots[r]] != 0) {
            Rat f = v[pivots[r]];
            for (size_t i = 0; i < v.size(); ++i) v[i] -= f * rows[r][i];
        }
    }
    size_t piv = v.size();
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) { piv = i; break; }
    if (piv == v.size()) return false;
    Rat ip = 1 / v[piv];
    for (auto& x : v) x *= ip;
    size_t pos = 0;
    while (pos < rows.size() && pivots[pos] < piv) ++pos;
    rows.insert(rows.begin() + pos, std::move(v));
    pivots.insert(pivots.begin() + pos, piv);
    return true;
}
} // namespace detail

/// Membership of x in the Q-span of the subfield basis.
inline bool subfield_contains(const Subfield& f, const FieldElement& x) {
    std::vector<Rat> v = x.c;
    for (size_t r = 0; r < f.basis.size(); ++r) {
        if (v[f.pivots[r]] != 0) {
            Rat fac = v[f.pivots[r]];
            for (size_t i = 0; i < v.size(); ++i) v[i] -= fac * f.basis[r][i];
        }
    }
    for (const auto& x0 : v)
        if (x0 != 0) return false;
    return true;
}

inline Subfield make_subfield(std::string name, TowerPtr tw, std::vector<FieldElement> gens) {
    Subfield f;
    f.name = std::move(name);
    f.gens = std::move(gens);
    detail::echelon_insert(f.basis, f.pivots, tw->one().c);
    // Closure of the span under multiplication by the generators.
    std::vector<std::vector<Rat>> work = f.basis;
    while (!work.empty()) {
        std::vector<Rat> cur = std::move(work.back());
        work.pop_back();
        FieldElement ce = tw->from_coords(cur);
        for (const auto& g : f.gens) {
            FieldElement prod = ce * g;
            if (detail::echelon_insert(f.basis, f.pivots, prod.c))
                work.push_back(prod.c);
        }
    }
    f.dim = f.basis.size();
    if (!f.gens.empty()) f.e_abs = ramification_index(f.gens);
    return f;
}

/// Ordered lattice of subfields.  The first entry is the base field K; the
/// top field is the one of maximal dimension.
struct SubfieldLattice {
    TowerPtr tw;
    std::vector<Subfield> fields;

    const Subfield& base() const { return fields.at(0); }
    size_t top_index() const {
        size_t best = 0;
        for (size_t i = 1; i < fields.size(); ++i)
            if (fields[i].dim > fields[best].dim) best = i;
        return best;
    }
    const Subfield& top() const { return fields[top_index()]; }
    /// Degree of fields[i] over the base.
    long degree_over_base(size_t i) const {
        const Subfield& f = fields.at(i);
        if (f.dim % base().dim != 0)
            throw mf_error("BadLattice", "degree not multiplicative over the base");
        return static_cast<long>(f.dim / base().dim);
    }
    size_t index_of(const std::string& nm) const {
        for (size_t i = 0; i < fields.size(); ++i)
            if (fields[i].name == nm) return i;
        throw mf_error("BadIndex", "no subfield named '" + nm + "'");
    }
};

inline SubfieldLattice make_lattice(TowerPtr tw,
                                    std::vector<std::pair<std::string, std::vector<FieldElement>>> defs) {
    SubfieldLattice lat;
    lat.tw = tw;
    for (auto& [nm, gens] : defs) lat.fields.push_back(make_subfield(nm, tw, std::move(gens)));
    if (lat.fields.empty()) throw mf_error("BadLattice", "empty lattice");
    return lat;
}

} // namespace mumford
