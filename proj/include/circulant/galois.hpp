#pragma once

// Resultants, discriminants, and the Galois group of an integer quartic via
// the resolvent cubic. Everything is exact integer arithmetic.

#include <string>
#include <vector>

#include "circulant/bigint.hpp"
#include "circulant/errors.hpp"
#include "circulant/factorization.hpp"
#include "circulant/matrix.hpp"
#include "circulant/polynomial.hpp"

namespace circulant {

// Determinant of the Sylvester matrix of a and b.
inline BigInt sylvester_resultant(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) throw ConfigError("sylvester_resultant: zero polynomial");
    int da = a.degree(), db = b.degree();
    if (da == 0) return big_pow(a.coeff(0), static_cast<unsigned long>(db));
    if (db == 0) return big_pow(b.coeff(0), static_cast<unsigned long>(da));
    int size = da + db;
    IntMatrix m(size, size);
    for (int i = 0; i < db; ++i)
        for (int j = 0; j <= da; ++j) m.at(i, i + j) = a.coeff(da - j);
    for (int i = 0; i < da; ++i)
        for (int j = 0; j <= db; ++j) m.at(db + i, i + j) = b.coeff(db - j);
    return bareiss_determinant(m);
}

// disc(f) = (-1)^{d(d-1)/2} Res(f, f') / lead(f).
inline BigInt discriminant(const IntPoly& f) {
    if (f.degree() < 2) throw ConfigError("discriminant: needs degree >= 2");
    BigInt res = sylvester_resultant(f, derivative(f));
    BigInt out;
    if (!mpz_divisible_p(res.get_mpz_t(), f.lead().get_mpz_t()))
        throw StructuralError("discriminant: resultant not divisible by the leading coefficient",
                              to_string(res), to_string(f.lead()));
    mpz_divexact(out.get_mpz_t(), res.get_mpz_t(), f.lead().get_mpz_t());
    int d = f.degree();
    if ((d * (d - 1) / 2) % 2 != 0) out = -out;
    return out;
}

enum class QuarticGroup { S4, A4, D4, C4, V4, reducible };

inline const char* quartic_group_name(QuarticGroup g) {
    switch (g) {
        case QuarticGroup::S4: return "S4";
        case QuarticGroup::A4: return "A4";
        case QuarticGroup::D4: return "D4";
        case QuarticGroup::C4: return "C4";
        case QuarticGroup::V4: return "V4";
        default: return "reducible";
    }
}

struct GaloisReport {
    IntPoly quartic;
    bool irreducible = false;
    std::vector<IntPoly> rational_factors; // filled when reducible
    IntPoly resolvent;
    std::vector<BigInt> resolvent_roots;
    BigInt disc;
    bool disc_square = false;
    QuarticGroup group = QuarticGroup::reducible;
};

namespace detail {

inline bool is_square_int(const BigInt& v) {
    if (v < 0) return false;
    return exact_sqrt(v).has_value();
}

// All divisors of |v| (both signs), via trial division. v must be nonzero
// and reasonably sized.
inline std::vector<BigInt> all_divisors_signed(const BigInt& v) {
    BigInt a = v < 0 ? BigInt(-v) : v;
    if (a == 0) throw ConfigError("all_divisors_signed: zero");
    if (mpz_sizeinbase(a.get_mpz_t(), 2) > 50)
        throw CapExceeded("all_divisors_signed: constant term too large to enumerate divisors");
    unsigned long n = mpz_get_ui(a.get_mpz_t());
    std::vector<BigInt> out;
    for (unsigned long i = 1; i * i <= n; ++i) {
        if (n % i != 0) continue;
        out.emplace_back(static_cast<long>(i));
        out.emplace_back(-static_cast<long>(i));
        unsigned long j = n / i;
        if (j != i) {
            out.emplace_back(static_cast<long>(j));
            out.emplace_back(-static_cast<long>(j));
        }
    }
    return out;
}

} // namespace detail

// Galois group of a monic integer quartic. Reducibility over Q is decided
// exactly first (monic integer factors suffice by Gauss); the irreducible
// case goes through the resolvent cubic, the discriminant, and the
// two-quadratics splitting test for the one-rational-root case.
inline GaloisReport quartic_galois(const IntPoly& f) {
    if (f.degree() != 4) throw ConfigError("quartic_galois: needs degree 4");
    if (f.lead() != 1) throw ConfigError("quartic_galois: needs a monic quartic");

    GaloisReport rep;
    rep.quartic = f;
    const BigInt& a = f.coeff(3);
    const BigInt& b = f.coeff(2);
    const BigInt& c = f.coeff(1);
    const BigInt& d = f.coeff(0);

    // linear factors
    IntPoly rest = f;
    auto roots = integer_roots(f);
    if (roots) {
        for (const BigInt& r : *roots) {
            IntPoly linear(std::vector<BigInt>{-r, 1});
            while (divides(linear, rest)) {
                rest = exact_divide(rest, linear);
                rep.rational_factors.push_back(linear);
            }
        }
    }
    // quadratic splits of the remaining part (only relevant if no roots)
    if (rest.degree() == 4 && d != 0) {
        for (const BigInt& p : detail::all_divisors_signed(d)) {
            BigInt q = d / p;
            // x^2 + ux + p times x^2 + vx + q: u + v = a, uv = b - p - q,
            // and uq + vp must match c
            BigInt prod = b - p - q;
            BigInt disc_uv = a * a - 4 * prod;
            if (!detail::is_square_int(disc_uv)) continue;
            BigInt s = *exact_sqrt(disc_uv);
            for (const BigInt& u2 : {BigInt(a + s), BigInt(a - s)}) {
                if (mpz_odd_p(u2.get_mpz_t())) continue;
                BigInt u = u2 / 2, v = a - u;
                if (u * q + v * p == c) {
                    rep.rational_factors.push_back(IntPoly(std::vector<BigInt>{p, u, 1}));
                    rep.rational_factors.push_back(IntPoly(std::vector<BigInt>{q, v, 1}));
                    rest = IntPoly::constant(1);
                    break;
                }
            }
            if (rest.degree() < 4) break;
        }
    }
    if (rest.degree() != 4) {
        if (rest.degree() >= 1) rep.rational_factors.push_back(rest);
        rep.irreducible = false;
        rep.group = QuarticGroup::reducible;
        // keep the resolvent data around anyway; it is cheap
    } else {
        rep.irreducible = true;
        rep.rational_factors.clear();
    }

    rep.resolvent = IntPoly(std::vector<BigInt>{-(a * a * d - 4 * b * d + c * c), a * c - 4 * d, -b, 1});
    auto rroots = integer_roots(rep.resolvent);
    if (rroots) rep.resolvent_roots = *rroots;
    rep.disc = discriminant(f);
    rep.disc_square = detail::is_square_int(rep.disc);

    if (!rep.irreducible) return rep;

    auto splits_over_disc_field = [&](const BigInt& delta) {
        return delta == 0 || detail::is_square_int(delta) || detail::is_square_int(delta * rep.disc);
    };

    switch (rep.resolvent_roots.size()) {
        case 3:
            rep.group = QuarticGroup::V4;
            break;
        case 0:
            rep.group = rep.disc_square ? QuarticGroup::A4 : QuarticGroup::S4;
            break;
        case 1: {
            const BigInt& beta = rep.resolvent_roots.front();
            BigInt delta1 = beta * beta - 4 * d;
            BigInt delta2 = a * a - 4 * (b - beta);
            rep.group = (splits_over_disc_field(delta1) && splits_over_disc_field(delta2))
                            ? QuarticGroup::C4
                            : QuarticGroup::D4;
            break;
        }
        default:
            throw StructuralError("quartic_galois: impossible resolvent root count",
                                  std::to_string(rep.resolvent_roots.size()), "0, 1, or 3");
    }
    return rep;
}

} // namespace circulant
