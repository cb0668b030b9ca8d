#pragma once

// Dense univariate polynomials over an exact coefficient ring. Coefficients
// are stored ascending (c[0] + c[1] x + ...) and kept trimmed, so the zero
// polynomial has an empty coefficient vector and degree -1.
//
// The coefficient type R must default-construct to its additive zero and
// provide +, -, *, ==. Division-flavoured operations state their extra
// requirements individually.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "circulant/bigint.hpp"
#include "circulant/errors.hpp"

namespace circulant {

template <class R>
class Polynomial {
public:
    Polynomial() = default;

    explicit Polynomial(std::vector<R> ascending) : c_(std::move(ascending)) { trim(); }

    static Polynomial zero() { return Polynomial(); }

    static Polynomial constant(R value) { return Polynomial(std::vector<R>{std::move(value)}); }

    static Polynomial monomial(size_t deg, R coeff) {
        std::vector<R> c(deg + 1);
        c[deg] = std::move(coeff);
        return Polynomial(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const std::vector<R>& coeffs() const { return c_; }

    // Safe indexed access; out-of-range coefficients read as zero.
    R coeff(size_t i) const { return i < c_.size() ? c_[i] : R(); }

    const R& lead() const {
        if (c_.empty()) throw ConfigError("Polynomial::lead on zero polynomial");
        return c_.back();
    }

    bool operator==(const Polynomial& o) const { return c_ == o.c_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial operator-() const {
        std::vector<R> c(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) c[i] = R() - c_[i];
        return Polynomial(std::move(c));
    }

    Polynomial operator+(const Polynomial& o) const {
        std::vector<R> c(std::max(c_.size(), o.c_.size()));
        for (size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) + o.coeff(i);
        return Polynomial(std::move(c));
    }

    Polynomial operator-(const Polynomial& o) const {
        std::vector<R> c(std::max(c_.size(), o.c_.size()));
        for (size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) - o.coeff(i);
        return Polynomial(std::move(c));
    }

    Polynomial operator*(const Polynomial& o) const {
        if (is_zero() || o.is_zero()) return Polynomial();
        std::vector<R> c(c_.size() + o.c_.size() - 1);
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == R()) continue;
            for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] = c[i + j] + c_[i] * o.c_[j];
        }
        return Polynomial(std::move(c));
    }

    Polynomial operator*(const R& s) const {
        std::vector<R> c(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] * s;
        return Polynomial(std::move(c));
    }

    Polynomial& operator+=(const Polynomial& o) { *this = *this + o; return *this; }
    Polynomial& operator-=(const Polynomial& o) { *this = *this - o; return *this; }
    Polynomial& operator*=(const Polynomial& o) { *this = *this * o; return *this; }

    // Multiply by x^k.
    Polynomial shifted(size_t k) const {
        if (is_zero()) return Polynomial();
        std::vector<R> c(c_.size() + k);
        std::copy(c_.begin(), c_.end(), c.begin() + k);
        return Polynomial(std::move(c));
    }

    R evaluate(const R& x) const {
        R acc{};
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    // Number of trailing zero coefficients, i.e. the multiplicity of the
    // root at the origin. Zero polynomial reports 0.
    size_t valuation() const {
        size_t v = 0;
        while (v < c_.size() && c_[v] == R()) ++v;
        return v == c_.size() ? 0 : v;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == R()) c_.pop_back();
    }

    std::vector<R> c_;
};

using IntPoly = Polynomial<BigInt>;
using RatPoly = Polynomial<BigRational>;

// Descending-power rendering, e.g. "x^3 - 3*x^2 - 8*x + 10".
inline std::string to_pretty_string(const IntPoly& p, const std::string& var = "x") {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        BigInt c = p.coeff(i);
        if (c == 0) continue;
        if (!out.empty()) out += c > 0 ? " + " : " - ";
        else if (c < 0) out += "-";
        BigInt a = abs(c);
        bool skip_unit = (a == 1) && i > 0;
        if (!skip_unit) out += a.get_str();
        if (i > 0) {
            if (!skip_unit) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

inline RatPoly to_rational(const IntPoly& p) {
    std::vector<BigRational> c(p.coeffs().size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = BigRational(p.coeffs()[i]);
    return RatPoly(std::move(c));
}

// Fails (nullopt) if any coefficient has a nontrivial denominator.
inline std::optional<IntPoly> to_integral(const RatPoly& p) {
    std::vector<BigInt> c(p.coeffs().size());
    for (size_t i = 0; i < c.size(); ++i) {
        if (!is_integer(p.coeffs()[i])) return std::nullopt;
        c[i] = numerator(p.coeffs()[i]);
    }
    return IntPoly(std::move(c));
}

// Quotient and remainder over the rationals; the divisor must be nonzero.
inline std::pair<RatPoly, RatPoly> divrem(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw ConfigError("divrem: division by zero polynomial");
    std::vector<BigRational> rem(a.coeffs().begin(), a.coeffs().end());
    int db = b.degree();
    int dq = a.degree() - db;
    if (dq < 0) return {RatPoly(), a};
    std::vector<BigRational> quot(dq + 1);
    const BigRational& lb = b.lead();
    for (int i = dq; i >= 0; --i) {
        BigRational f = rem[i + db] / lb;
        quot[i] = f;
        if (f == 0) continue;
        for (int j = 0; j < db; ++j) rem[i + j] = rem[i + j] - f * b.coeffs()[j];
        rem[i + db] = 0;
    }
    return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

inline std::pair<RatPoly, RatPoly> divrem(const IntPoly& a, const IntPoly& b) {
    return divrem(to_rational(a), to_rational(b));
}

// Exact division: throws if b does not divide a over the rationals or the
// quotient fails to be integral.
inline IntPoly exact_divide(const IntPoly& a, const IntPoly& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero())
        throw StructuralError("exact_divide: nonzero remainder", to_pretty_string(a), to_pretty_string(b));
    auto qi = to_integral(q);
    if (!qi)
        throw StructuralError("exact_divide: non-integral quotient", to_pretty_string(a), to_pretty_string(b));
    return *qi;
}

inline bool divides(const IntPoly& b, const IntPoly& a) {
    auto [q, r] = divrem(a, b);
    (void)q;
    return r.is_zero();
}

// gcd of all coefficients; content of the zero polynomial is 0.
inline BigInt content(const IntPoly& p) {
    BigInt g = 0;
    for (const auto& c : p.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

inline IntPoly primitive_part(const IntPoly& p) {
    if (p.is_zero()) return p;
    BigInt g = content(p);
    if (p.lead() < 0) g = -g;
    std::vector<BigInt> c(p.coeffs().size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = p.coeffs()[i] / g;
    return IntPoly(std::move(c));
}

inline IntPoly derivative(const IntPoly& p) {
    if (p.degree() <= 0) return IntPoly();
    std::vector<BigInt> c(p.degree());
    for (int i = 1; i <= p.degree(); ++i) c[i - 1] = p.coeff(i) * i;
    return IntPoly(std::move(c));
}

// Monic square root of a monic even-degree polynomial, if one exists.
// The candidate is built top-down over the rationals and certified by
// exact re-expansion before being accepted.
inline std::optional<IntPoly> poly_square_root(const IntPoly& f) {
    if (f.is_zero() || f.degree() % 2 != 0 || f.lead() != 1) return std::nullopt;
    int m = f.degree() / 2;
    std::vector<BigRational> g(m + 1);
    g[m] = 1;
    for (int i = m - 1; i >= 0; --i) {
        // Coefficient of x^{m+i} in g^2 equals 2 g_i + sum of g_j g_k over
        // ordered pairs with j + k = m + i and i < j,k < m.
        BigRational interior = 0;
        for (int j = i + 1; j <= m - 1; ++j) {
            int k = m + i - j;
            if (k >= i + 1 && k <= m - 1) interior += g[j] * g[k];
        }
        g[i] = (BigRational(f.coeff(m + i)) - interior) / 2;
    }
    RatPoly cand(std::move(g));
    if (!(cand * cand == to_rational(f))) return std::nullopt;
    return to_integral(cand);
}

} // namespace circulant
