#pragma once

#include <random>

#include "field.hpp"

namespace mumford {

/// A dense polynomial over (a subfield of) the tower.  Trailing zero
/// coefficients are stripped; the zero polynomial has an empty list.
struct Poly {
    TowerPtr tw;
    std::vector<FieldElement> c;

    bool is_zero() const { return c.empty(); }
    long deg() const { return static_cast<long>(c.size()) - 1; } // -1 for zero
    void strip() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
};

inline Poly poly_make(TowerPtr tw, std::vector<FieldElement> coeffs) {
    Poly f{std::move(tw), std::move(coeffs)};
    f.strip();
    return f;
}

inline Poly poly_from_rats(TowerPtr tw, const std::vector<Rat>& coeffs) {
    std::vector<FieldElement> c;
    c.reserve(coeffs.size());
    for (const auto& q : coeffs) c.push_back(tw->from_rat(q));
    return poly_make(tw, std::move(c));
}

inline bool poly_monic(const Poly& f) {
    return !f.is_zero() && f.c.back() == f.tw->one();
}

inline Poly poly_add(const Poly& f, const Poly& g) {
    Poly r{f.tw, {}};
    size_t n = std::max(f.c.size(), g.c.size());
    for (size_t i = 0; i < n; ++i) {
        FieldElement x = i < f.c.size() ? f.c[i] : f.tw->zero();
        if (i < g.c.size()) x = x + g.c[i];
        r.c.push_back(std::move(x));
    }
    r.strip();
    return r;
}

inline Poly poly_neg(const Poly& f) {
    Poly r = f;
    for (auto& x : r.c) x = -x;
    return r;
}

inline Poly poly_sub(const Poly& f, const Poly& g) { return poly_add(f, poly_neg(g)); }

inline Poly poly_mul(const Poly& f, const Poly& g) {
    if (f.is_zero() || g.is_zero()) return Poly{f.tw, {}};
    Poly r{f.tw, std::vector<FieldElement>(f.c.size() + g.c.size() - 1, f.tw->zero())};
    for (size_t i = 0; i < f.c.size(); ++i)
        for (size_t j = 0; j < g.c.size(); ++j) r.c[i + j] = r.c[i + j] + f.c[i] * g.c[j];
    r.strip();
    return r;
}

/// Division with remainder by a monic divisor.
inline std::pair<Poly, Poly> poly_divmod(Poly f, const Poly& d) {
    if (!poly_monic(d)) throw mf_error("NonMonic", "division requires a monic divisor");
    Poly q{f.tw, {}};
    long dd = d.deg();
    if (f.deg() >= dd) q.c.assign(f.deg() - dd + 1, f.tw->zero());
    while (f.deg() >= dd) {
        long k = f.deg() - dd;
        FieldElement lead = f.c.back();
        q.c[k] = lead;
        for (long i = 0; i <= dd; ++i)
            f.c[k + i] = f.c[k + i] - lead * d.c[i];
        f.strip();
    }
    q.strip();
    return {std::move(q), std::move(f)};
}

/// An inductive (Mac Lane) valuation: the Gauss valuation of the base field
/// augmented by a chain of key polynomials phi_i with assigned values
/// lambda_i.  All values are base-normalized, v(K^x) = Z, so lambdas carry
/// the denominators that Lemma-style multiplicity counting expects.
struct MLValuation {
    struct Level {
        Poly phi; // monic
        Rat lambda;
    };
    TowerPtr tw;
    std::string base_name = "K";
    long e_base = 1; // absolute ramification index of the base field
    std::vector<Level> chain;
};

/// Gauss valuation: minimum base-normalized coefficient valuation.
inline Val gauss_eval(const MLValuation& v, const Poly& f) {
    if (f.is_zero()) return Val::infinity();
    Val m = Val::infinity();
    for (const auto& co : f.c) {
        Val t = v_of(co);
        if (!t.is_inf()) t = Val(t.finite() * Rat(v.e_base));
        m = val_min(m, t);
    }
    return m;
}

namespace detail {
inline Val ml_eval(const MLValuation& v, size_t level, const Poly& f) {
    if (f.is_zero()) return Val::infinity();
    if (level == 0) return gauss_eval(v, f);
    const MLValuation::Level& lv = v.chain[level - 1];
    Val best = Val::infinity();
    Poly rest = f;
    Rat weight(0);
    while (!rest.is_zero()) {
        auto [q, a] = poly_divmod(rest, lv.phi);
        if (!a.is_zero()) best = val_min(best, ml_eval(v, level - 1, a) + Val(weight));
        rest = std::move(q);
        weight += lv.lambda;
    }
    return best;
}
} // namespace detail

/// Recursive phi-adic evaluation v(f); the empty chain is the Gauss valuation.
inline Val evaluate(const MLValuation& v, const Poly& f) {
    return detail::ml_eval(v, v.chain.size(), f);
}

/// The prefix valuations v_0 <= v_1 <= ... <= v_n = v.
inline std::vector<MLValuation> truncations(const MLValuation& v) {
    std::vector<MLValuation> out;
    for (size_t k = 0; k <= v.chain.size(); ++k) {
        MLValuation t = v;
        t.chain.resize(k);
        out.push_back(std::move(t));
    }
    return out;
}

/// lcm of the denominators of the lambdas (1 for the Gauss valuation).
inline long multiplicity(const MLValuation& v) {
    long m = 1;
    for (const auto& lv : v.chain) m = lcm_long(m, rat_denominator_long(lv.lambda));
    return m;
}

/// Checkable validity: monic keys and each lambda strictly raising the value
/// its predecessor assigns to the key.  Full key-polynomial validity is not
/// decided here; see multiplicativity_oracle.
inline void check_valid(const MLValuation& v) {
    for (size_t k = 0; k < v.chain.size(); ++k) {
        const auto& lv = v.chain[k];
        if (!poly_monic(lv.phi))
            throw mf_error("NonMonic", "key polynomial at level " + std::to_string(k + 1));
        if (lv.phi.deg() < 1)
            throw mf_error("BadKey", "key polynomial must have degree >= 1");
        if (k > 0 && lv.phi.deg() < v.chain[k - 1].phi.deg())
            throw mf_error("BadKey", "key degrees must not decrease");
        MLValuation prev = v;
        prev.chain.resize(k);
        Val pv = evaluate(prev, lv.phi);
        if (!(Val(lv.lambda) > pv))
            throw mf_error("BadAugmentation",
                           "lambda at level " + std::to_string(k + 1) +
                               " does not exceed the previous value of its key");
    }
}

inline MLValuation make_mlv(TowerPtr tw, std::string base_name, long e_base,
                            std::vector<MLValuation::Level> chain) {
    MLValuation v{std::move(tw), std::move(base_name), e_base, std::move(chain)};
    check_valid(v);
    return v;
}

/// Random polynomial with small integer coefficients scaled by powers of p.
inline Poly random_poly(TowerPtr tw, std::mt19937_64& rng, int max_deg = 5) {
    std::uniform_int_distribution<int> dd(0, max_deg), cc(-9, 9), pp(0, 2);
    int d = dd(rng);
    std::vector<FieldElement> c;
    for (int i = 0; i <= d; ++i) {
        Rat q(cc(rng));
        int k = pp(rng);
        for (int t = 0; t < k; ++t) q *= Rat(tw->p);
        c.push_back(tw->from_rat(q));
    }
    return poly_make(tw, std::move(c));
}

struct OracleResult {
    bool ok = true;
    size_t samples = 0;
    std::string detail;
};

/// Randomized check of the valuation axioms: v(fg) = v(f) + v(g) and
/// v(f+g) >= min(v(f), v(g)) on random pairs.  A failure rejects the chain
/// as not geometric.
inline OracleResult multiplicativity_oracle(const MLValuation& v, size_t samples,
                                            std::uint64_t seed) {
    OracleResult res;
    std::mt19937_64 rng(seed);
    for (size_t i = 0; i < samples; ++i) {
        Poly f = random_poly(v.tw, rng), g = random_poly(v.tw, rng);
        if (f.is_zero() || g.is_zero()) continue;
        ++res.samples;
        Val vf = evaluate(v, f), vg = evaluate(v, g);
        if (evaluate(v, poly_mul(f, g)) != vf + vg) {
            res.ok = false;
            res.detail = "multiplicativity failed on sample " + std::to_string(i);
            return res;
        }
        if (evaluate(v, poly_add(f, g)) < val_min(vf, vg)) {
            res.ok = false;
            res.detail = "ultrametric inequality failed on sample " + std::to_string(i);
            return res;
        }
    }
    return res;
}

enum class MLOrder { less, equal, greater, incomparable, unknown };

inline std::string ml_order_str(MLOrder o) {
    switch (o) {
        case MLOrder::less: return "less";
        case MLOrder::equal: return "equal";
        case MLOrder::greater: return "greater";
        case MLOrder::incomparable: return "incomparable";
        default: return "unknown";
    }
}

namespace detail {
/// Key equivalence at a level: same degree and v_prev(phi - psi) >= lambda.
inline bool keys_equivalent(const MLValuation& prefix, const Poly& phi, const Poly& psi,
                            const Rat& lambda) {
    if (phi.deg() != psi.deg()) return false;
    Poly d = poly_sub(phi, psi);
    if (d.is_zero()) return true;
    return evaluate(prefix, d) >= lambda;
}

/// Length of the longest common chain prefix (equivalent keys, equal lambdas).
inline size_t common_prefix(const MLValuation& v, const MLValuation& w) {
    size_t k = 0;
    while (k < v.chain.size() && k < w.chain.size()) {
        if (v.chain[k].lambda != w.chain[k].lambda) break;
        MLValuation pre = v;
        pre.chain.resize(k);
        if (!keys_equivalent(pre, v.chain[k].phi, w.chain[k].phi, v.chain[k].lambda)) break;
        ++k;
    }
    return k;
}
} // namespace detail

/// Partial-order comparison.  Exact on structurally aligned chains (one a
/// prefix of the other, possibly with a raised last lambda); otherwise falls
/// back to evaluation on the key polynomials and a random sample, returning
/// `unknown` when the evidence is inconclusive.
inline MLOrder compare(const MLValuation& v, const MLValuation& w, size_t samples = 200,
                       std::uint64_t seed = 0xC0FFEEu) {
    size_t k = detail::common_prefix(v, w);
    const size_t nv = v.chain.size(), nw = w.chain.size();
    if (k == nv && k == nw) return MLOrder::equal;
    if (k == nv) return MLOrder::less;    // v is a truncation of w
    if (k == nw) return MLOrder::greater; // w is a truncation of v
    // same keys at the divergence level but different lambdas
    {
        MLValuation pre = v;
        pre.chain.resize(k);
        if (detail::keys_equivalent(pre, v.chain[k].phi, w.chain[k].phi,
                                    std::min(v.chain[k].lambda, w.chain[k].lambda))) {
            if (v.chain[k].lambda < w.chain[k].lambda && k + 1 == nv) return MLOrder::less;
            if (w.chain[k].lambda < v.chain[k].lambda && k + 1 == nw) return MLOrder::greater;
        }
    }
    // sampling fallback
    std::mt19937_64 rng(seed);
    bool v_below = false, w_below = false;
    auto probe = [&](const Poly& f) {
        if (f.is_zero()) return;
        Val a = evaluate(v, f), b = evaluate(w, f);
        if (a < b) v_below = true;
        if (b < a) w_below = true;
    };
    for (const auto& lv : v.chain) probe(lv.phi);
    for (const auto& lw : w.chain) probe(lw.phi);
    for (size_t i = 0; i < samples; ++i) probe(random_poly(v.tw, rng));
    if (v_below && w_below) return MLOrder::incomparable;
    if (v_below) return MLOrder::less;
    if (w_below) return MLOrder::greater;
    return MLOrder::unknown;
}

/// Greatest lower bound: the common prefix augmented at a divergence key phi
/// by min(v(phi), w(phi)).  Validated against both arguments via compare.
inline MLValuation infimum(const MLValuation& v, const MLValuation& w) {
    size_t k = detail::common_prefix(v, w);
    if (k == v.chain.size()) return v;
    if (k == w.chain.size()) return w;
    MLValuation pre = v;
    pre.chain.resize(k);
    for (const Poly& key : {v.chain[k].phi, w.chain[k].phi}) {
        Val a = evaluate(v, key), b = evaluate(w, key);
        Val lam = val_min(a, b);
        MLValuation cand = pre;
        if (!lam.is_inf() && Val(lam.finite()) > evaluate(pre, key))
            cand.chain.push_back({key, lam.finite()});
        MLOrder cv = compare(cand, v), cw = compare(cand, w);
        if ((cv == MLOrder::less || cv == MLOrder::equal) &&
            (cw == MLOrder::less || cw == MLOrder::equal))
            return cand;
    }
    throw mf_error("StructurallyIncomparable",
                   "chains share no usable prefix; fall back to the Gauss valuation");
}

struct InfClosedResult {
    bool closed = true;
    size_t witness_i = 0, witness_j = 0; // failing pair when not closed
};

/// A set is inf-closed iff every pairwise infimum compares equal to a member.
inline InfClosedResult inf_closed(const std::vector<MLValuation>& S) {
    for (size_t i = 0; i < S.size(); ++i)
        for (size_t j = i + 1; j < S.size(); ++j) {
            MLValuation f = infimum(S[i], S[j]);
            bool found = false;
            for (const auto& s : S)
                if (compare(f, s) == MLOrder::equal) { found = true; break; }
            if (!found) return {false, i, j};
        }
    return {};
}

/// Candidates for principal components: all truncations of all members.
inline std::vector<MLValuation> principal_candidates(const std::vector<MLValuation>& S) {
    std::vector<MLValuation> out;
    for (const auto& v : S)
        for (auto& t : truncations(v)) {
            bool dup = false;
            for (const auto& u : out)
                if (compare(u, t) == MLOrder::equal) { dup = true; break; }
            if (!dup) out.push_back(std::move(t));
        }
    return out;
}

/// m = lcm of member multiplicities; every candidate's multiplicity divides m
/// by construction, and this is checked.
inline long stability_index_bound(const std::vector<MLValuation>& S) {
    long m = 1;
    for (const auto& v : S) m = lcm_long(m, multiplicity(v));
    for (const auto& c : principal_candidates(S))
        if (m % multiplicity(c) != 0)
            throw mf_error("BoundViolated", "candidate multiplicity does not divide the bound");
    return m;
}

} // namespace mumford
