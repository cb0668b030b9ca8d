#pragma once

// Polynomials over F_p for word-size primes, plus complete factorization:
// squarefree decomposition (with p-th root descent), distinct-degree
// splitting, and Cantor-Zassenhaus equal-degree splitting driven by a
// deterministic trial sequence so identical inputs factor identically on
// every run.

#include <cstdint>
#include <string>
#include <vector>

#include "circulant/bigint.hpp"
#include "circulant/errors.hpp"
#include "circulant/polynomial.hpp"

namespace circulant {

struct PrimeFieldPoly {
    uint64_t p = 0;
    std::vector<uint64_t> c; // ascending, trimmed, entries in [0, p)

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    bool is_one() const { return c.size() == 1 && c[0] == 1; }
    uint64_t lead() const { return c.back(); }
    uint64_t coeff(size_t i) const { return i < c.size() ? c[i] : 0; }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

    bool operator==(const PrimeFieldPoly& o) const { return p == o.p && c == o.c; }
    bool operator!=(const PrimeFieldPoly& o) const { return !(*this == o); }
};

inline PrimeFieldPoly fp_make(uint64_t p, std::vector<uint64_t> c) {
    PrimeFieldPoly f{p, std::move(c)};
    for (auto& x : f.c) x %= p;
    f.trim();
    return f;
}

inline PrimeFieldPoly fp_x(uint64_t p) { return fp_make(p, {0, 1}); }

inline PrimeFieldPoly fp_const(uint64_t p, uint64_t v) { return fp_make(p, {v}); }

inline PrimeFieldPoly reduce_mod(const IntPoly& f, uint64_t p) {
    std::vector<uint64_t> c(f.coeffs().size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = mpz_fdiv_ui(f.coeffs()[i].get_mpz_t(), p);
    return fp_make(p, std::move(c));
}

inline void fp_check_same_field(const PrimeFieldPoly& a, const PrimeFieldPoly& b) {
    if (a.p != b.p) throw ConfigError("prime field mismatch");
}

inline PrimeFieldPoly fp_add(const PrimeFieldPoly& a, const PrimeFieldPoly& b) {
    fp_check_same_field(a, b);
    std::vector<uint64_t> c(std::max(a.c.size(), b.c.size()));
    for (size_t i = 0; i < c.size(); ++i) c[i] = addmod_u64(a.coeff(i), b.coeff(i), a.p);
    return fp_make(a.p, std::move(c));
}

inline PrimeFieldPoly fp_sub(const PrimeFieldPoly& a, const PrimeFieldPoly& b) {
    fp_check_same_field(a, b);
    std::vector<uint64_t> c(std::max(a.c.size(), b.c.size()));
    for (size_t i = 0; i < c.size(); ++i) c[i] = submod_u64(a.coeff(i), b.coeff(i), a.p);
    return fp_make(a.p, std::move(c));
}

inline PrimeFieldPoly fp_mul(const PrimeFieldPoly& a, const PrimeFieldPoly& b) {
    fp_check_same_field(a, b);
    if (a.is_zero() || b.is_zero()) return PrimeFieldPoly{a.p, {}};
    std::vector<uint64_t> c(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j)
            c[i + j] = addmod_u64(c[i + j], mulmod_u64(a.c[i], b.c[j], a.p), a.p);
    }
    return fp_make(a.p, std::move(c));
}

inline PrimeFieldPoly fp_scale(const PrimeFieldPoly& a, uint64_t s) {
    std::vector<uint64_t> c(a.c.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = mulmod_u64(a.c[i], s % a.p, a.p);
    return fp_make(a.p, std::move(c));
}

inline PrimeFieldPoly fp_monic(const PrimeFieldPoly& a) {
    if (a.is_zero() || a.lead() == 1) return a;
    return fp_scale(a, inverse_mod_prime(a.lead(), a.p));
}

inline std::pair<PrimeFieldPoly, PrimeFieldPoly> fp_divrem(const PrimeFieldPoly& a, const PrimeFieldPoly& b) {
    fp_check_same_field(a, b);
    if (b.is_zero()) throw ConfigError("fp_divrem: division by zero");
    if (a.degree() < b.degree()) return {PrimeFieldPoly{a.p, {}}, a};
    std::vector<uint64_t> rem = a.c;
    size_t db = b.c.size() - 1;
    std::vector<uint64_t> quot(a.c.size() - db, 0);
    uint64_t inv = inverse_mod_prime(b.lead(), a.p);
    for (size_t i = quot.size(); i-- > 0;) {
        uint64_t f = mulmod_u64(rem[i + db], inv, a.p);
        quot[i] = f;
        if (f == 0) continue;
        for (size_t j = 0; j <= db; ++j)
            rem[i + j] = submod_u64(rem[i + j], mulmod_u64(f, b.c[j], a.p), a.p);
    }
    return {fp_make(a.p, std::move(quot)), fp_make(a.p, std::move(rem))};
}

inline PrimeFieldPoly fp_mod(const PrimeFieldPoly& a, const PrimeFieldPoly& b) {
    return fp_divrem(a, b).second;
}

inline PrimeFieldPoly fp_divexact(const PrimeFieldPoly& a, const PrimeFieldPoly& b) {
    auto [q, r] = fp_divrem(a, b);
    if (!r.is_zero()) throw StructuralError("fp_divexact: nonzero remainder", "deg " + std::to_string(a.degree()), "deg " + std::to_string(b.degree()));
    return q;
}

// Monic gcd by Euclid.
inline PrimeFieldPoly fp_gcd(PrimeFieldPoly a, PrimeFieldPoly b) {
    fp_check_same_field(a, b);
    while (!b.is_zero()) {
        PrimeFieldPoly r = fp_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return fp_monic(a);
}

inline PrimeFieldPoly fp_derivative(const PrimeFieldPoly& a) {
    if (a.c.size() <= 1) return PrimeFieldPoly{a.p, {}};
    std::vector<uint64_t> c(a.c.size() - 1);
    for (size_t i = 1; i < a.c.size(); ++i) c[i - 1] = mulmod_u64(a.c[i], i % a.p, a.p);
    return fp_make(a.p, std::move(c));
}

inline uint64_t fp_eval(const PrimeFieldPoly& a, uint64_t x) {
    uint64_t acc = 0;
    for (size_t i = a.c.size(); i-- > 0;) acc = addmod_u64(mulmod_u64(acc, x, a.p), a.c[i], a.p);
    return acc;
}

// base^e mod f, with a bignum exponent (needed for (p^d - 1)/2).
inline PrimeFieldPoly fp_powmod(const PrimeFieldPoly& base, const BigInt& e, const PrimeFieldPoly& f) {
    if (e < 0) throw ConfigError("fp_powmod: negative exponent");
    PrimeFieldPoly result = fp_const(f.p, 1);
    PrimeFieldPoly b = fp_mod(base, f);
    size_t bits = bit_length(e);
    for (size_t i = bits; i-- > 0;) {
        result = fp_mod(fp_mul(result, result), f);
        if (mpz_tstbit(e.get_mpz_t(), i)) result = fp_mod(fp_mul(result, b), f);
    }
    return result;
}

inline PrimeFieldPoly fp_powmod(const PrimeFieldPoly& base, uint64_t e, const PrimeFieldPoly& f) {
    return fp_powmod(base, BigInt(e), f);
}

struct ModFactor {
    PrimeFieldPoly poly; // monic irreducible
    int multiplicity;
};

struct ModFactorization {
    uint64_t p = 0;
    uint64_t leading = 1;            // unit so that f = leading * prod poly^mult
    std::vector<ModFactor> factors;  // sorted by (degree, coefficients)

    // Degrees of irreducible factors, multiplicity expanded, ascending.
    std::vector<int> degree_pattern() const {
        std::vector<int> d;
        for (const auto& f : factors)
            for (int i = 0; i < f.multiplicity; ++i) d.push_back(f.poly.degree());
        std::sort(d.begin(), d.end());
        return d;
    }

    // Roots in F_p read off the linear factors, ascending.
    std::vector<uint64_t> roots() const {
        std::vector<uint64_t> r;
        for (const auto& f : factors)
            if (f.poly.degree() == 1) r.push_back(submod_u64(0, f.poly.c[0], p));
        std::sort(r.begin(), r.end());
        return r;
    }
};

namespace detail {

// Coefficient-wise p-th root of g(x) = h(x^p); valid over F_p where the
// Frobenius fixes every scalar.
inline PrimeFieldPoly fp_pth_root(const PrimeFieldPoly& g) {
    std::vector<uint64_t> c;
    for (size_t i = 0; i < g.c.size(); i += static_cast<size_t>(g.p)) c.push_back(g.c[i]);
    return fp_make(g.p, std::move(c));
}

// Monic squarefree decomposition in characteristic p.
inline void fp_squarefree(const PrimeFieldPoly& f, int mult, std::vector<std::pair<PrimeFieldPoly, int>>& out) {
    if (f.degree() <= 0) return;
    PrimeFieldPoly d = fp_derivative(f);
    if (d.is_zero()) {
        fp_squarefree(fp_pth_root(f), mult * static_cast<int>(f.p), out);
        return;
    }
    PrimeFieldPoly g = fp_gcd(f, d);
    PrimeFieldPoly w = fp_divexact(f, g);
    int i = 1;
    while (w.degree() > 0) {
        PrimeFieldPoly y = fp_gcd(w, g);
        PrimeFieldPoly z = fp_divexact(w, y);
        if (z.degree() > 0) out.emplace_back(fp_monic(z), mult * i);
        ++i;
        w = std::move(y);
        g = fp_divexact(g, w);
    }
    if (g.degree() > 0) fp_squarefree(fp_pth_root(g), mult * static_cast<int>(f.p), out);
}

// Deterministic trial polynomials for equal-degree splitting.
inline PrimeFieldPoly fp_trial(uint64_t p, int max_deg, uint64_t counter) {
    uint64_t s = counter * 0x9e3779b97f4a7c15ull + 0x2545f4914f6cdd1dull;
    std::vector<uint64_t> c(static_cast<size_t>(max_deg) + 1);
    for (auto& x : c) {
        s = s * 6364136223846793005ull + 1442695040888963407ull;
        x = (s >> 8) % p;
    }
    if (c.back() == 0) c.back() = 1;
    return fp_make(p, std::move(c));
}

// Split a monic product of distinct irreducibles all of degree d.
inline void fp_equal_degree(const PrimeFieldPoly& f, int d, std::vector<PrimeFieldPoly>& out) {
    if (f.degree() == d) {
        out.push_back(f);
        return;
    }
    uint64_t p = f.p;
    for (uint64_t attempt = 0;; ++attempt) {
        PrimeFieldPoly a = fp_trial(p, f.degree() - 1, attempt);
        PrimeFieldPoly g;
        if (p == 2) {
            // Trace map over F_2: a + a^2 + ... + a^{2^{d-1}}.
            PrimeFieldPoly t = fp_mod(a, f);
            PrimeFieldPoly acc = t;
            for (int i = 1; i < d; ++i) {
                t = fp_mod(fp_mul(t, t), f);
                acc = fp_add(acc, t);
            }
            g = fp_gcd(acc, f);
        } else {
            BigInt e = (big_pow(BigInt(p), static_cast<unsigned long>(d)) - 1) / 2;
            PrimeFieldPoly b = fp_powmod(a, e, f);
            g = fp_gcd(fp_sub(b, fp_const(p, 1)), f);
        }
        if (g.degree() > 0 && g.degree() < f.degree()) {
            fp_equal_degree(g, d, out);
            fp_equal_degree(fp_divexact(f, g), d, out);
            return;
        }
    }
}

} // namespace detail

// Complete factorization over F_p. The modulus must be prime.
inline ModFactorization factor_mod_p(const PrimeFieldPoly& f) {
    if (!is_prime_u64(f.p)) throw ConfigError("factor_mod_p: composite modulus " + std::to_string(f.p));
    if (f.is_zero()) throw ConfigError("factor_mod_p: zero polynomial");
    ModFactorization out;
    out.p = f.p;
    out.leading = f.lead();
    if (f.degree() == 0) return out;

    std::vector<std::pair<PrimeFieldPoly, int>> sqf;
    detail::fp_squarefree(fp_monic(f), 1, sqf);

    for (auto& [part, mult] : sqf) {
        // Distinct-degree splitting of the squarefree part.
        PrimeFieldPoly g = part;
        PrimeFieldPoly h = fp_mod(fp_x(f.p), g);
        for (int d = 1; 2 * d <= g.degree(); ++d) {
            h = fp_powmod(h, f.p, g);
            PrimeFieldPoly t = fp_gcd(fp_sub(h, fp_x(f.p)), g);
            if (t.degree() > 0) {
                std::vector<PrimeFieldPoly> pieces;
                detail::fp_equal_degree(t, d, pieces);
                for (auto& q : pieces) out.factors.push_back({q, mult});
                g = fp_divexact(g, t);
                h = fp_mod(h, g);
            }
        }
        if (g.degree() > 0) out.factors.push_back({g, mult});
    }

    std::sort(out.factors.begin(), out.factors.end(), [](const ModFactor& a, const ModFactor& b) {
        if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
        return a.poly.c < b.poly.c;
    });
    return out;
}

inline ModFactorization factor_mod_p(const IntPoly& f, uint64_t p) {
    PrimeFieldPoly r = reduce_mod(f, p);
    if (r.is_zero())
        throw ConfigError("factor_mod_p: polynomial vanishes mod " + std::to_string(p));
    return factor_mod_p(r);
}

} // namespace circulant
