#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace mumford {

using Int = mpz_class;
using Rat = mpq_class;

/// Library error with a stable machine-readable code ("PoleOnBoundary",
/// "DepthExceeded", ...) alongside the human-readable message.
struct mf_error : std::runtime_error {
    std::string code;
    mf_error(std::string c, const std::string& msg)
        : std::runtime_error(c + ": " + msg), code(std::move(c)) {}
};

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw mf_error("DivisionByZero", "rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat rat_parse(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0)
        throw mf_error("BadRational", "cannot parse rational '" + s + "'");
    if (q.get_den() == 0) throw mf_error("DivisionByZero", "zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline Int rat_den(const Rat& q) { return q.get_den(); }

/// p-adic valuation of a nonzero integer.
inline long vp_int(const Int& n, const Int& p) {
    if (n == 0) throw mf_error("DivisionByZero", "vp of zero integer");
    Int reduced;
    return static_cast<long>(mpz_remove(reduced.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

/// A valuation value: a rational or +infinity (the value of 0).
struct Val {
    bool inf = false;
    Rat q;

    Val() = default;
    Val(Rat v) : inf(false), q(std::move(v)) {}
    static Val infinity() { Val v; v.inf = true; return v; }

    bool is_inf() const { return inf; }
    const Rat& finite() const {
        if (inf) throw mf_error("InfiniteValuation", "expected a finite valuation");
        return q;
    }

    friend Val operator+(const Val& a, const Val& b) {
        if (a.inf || b.inf) return infinity();
        return Val(a.q + b.q);
    }
    friend Val operator-(const Val& a, const Val& b) {
        if (a.inf) return infinity();
        if (b.inf) throw mf_error("InfiniteValuation", "cannot subtract infinity");
        return Val(a.q - b.q);
    }
    friend bool operator==(const Val& a, const Val& b) {
        if (a.inf || b.inf) return a.inf && b.inf;
        return a.q == b.q;
    }
    friend bool operator!=(const Val& a, const Val& b) { return !(a == b); }
    friend bool operator<(const Val& a, const Val& b) {
        if (a.inf) return false;
        if (b.inf) return true;
        return a.q < b.q;
    }
    friend bool operator>(const Val& a, const Val& b) { return b < a; }
    friend bool operator<=(const Val& a, const Val& b) { return !(b < a); }
    friend bool operator>=(const Val& a, const Val& b) { return !(a < b); }

    friend bool operator<(const Val& a, const Rat& b) { return !a.inf && a.q < b; }
    friend bool operator>(const Val& a, const Rat& b) { return a.inf || a.q > b; }
    friend bool operator<=(const Val& a, const Rat& b) { return !a.inf && a.q <= b; }
    friend bool operator>=(const Val& a, const Rat& b) { return a.inf || a.q >= b; }
    friend bool operator==(const Val& a, const Rat& b) { return !a.inf && a.q == b; }

    std::string str() const { return inf ? "inf" : q.get_str(); }
};

inline Val val_min(const Val& a, const Val& b) { return a < b ? a : b; }

/// p-adic valuation of a rational.
inline Val vp_rat(const Rat& x, const Int& p) {
    if (x == 0) return Val::infinity();
    return Val(Rat(vp_int(x.get_num(), p) - vp_int(x.get_den(), p)));
}

inline long lcm_long(long a, long b) {
    Int l;
    Int ia(a), ib(b);
    mpz_lcm(l.get_mpz_t(), ia.get_mpz_t(), ib.get_mpz_t());
    if (!l.fits_slong_p()) throw mf_error("Overflow", "lcm too large");
    return l.get_si();
}

/// Least n >= 1 with n*q an integer.
inline long rat_denominator_long(const Rat& q) {
    Int d = q.get_den();
    if (!d.fits_slong_p()) throw mf_error("Overflow", "denominator too large");
    return d.get_si();
}

} // namespace mumford
