#pragma once

// Exact arithmetic in Q(omega) for omega a primitive n-th root of unity,
// n an odd prime. Elements live in the power basis 1, omega, ...,
// omega^{n-2}; reduction uses omega^{n-1} = -(1 + omega + ... + omega^{n-2}).
//
// A default-constructed element is a field-agnostic zero that adopts the
// field of the first operand it meets, which lets these elements sit inside
// the generic Polynomial and Matrix templates.

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "circulant/bigint.hpp"
#include "circulant/errors.hpp"
#include "circulant/matrix.hpp"
#include "circulant/polynomial.hpp"

namespace circulant {

class CyclotomicElement {
public:
    CyclotomicElement() : n_(0) {}

    static void check_order(unsigned n) {
        if (n < 3 || !is_prime_u64(n))
            throw ConfigError("CyclotomicElement: order must be an odd prime, got " + std::to_string(n));
    }

    static CyclotomicElement zero(unsigned n) {
        check_order(n);
        CyclotomicElement e;
        e.n_ = n;
        e.co_.assign(n - 1, BigRational(0));
        return e;
    }

    static CyclotomicElement rational(unsigned n, const BigRational& q) {
        CyclotomicElement e = zero(n);
        e.co_[0] = q;
        return e;
    }

    static CyclotomicElement from_coords(unsigned n, std::vector<BigRational> co) {
        check_order(n);
        if (co.size() != n - 1) throw ConfigError("CyclotomicElement: wrong coordinate count");
        CyclotomicElement e;
        e.n_ = n;
        e.co_ = std::move(co);
        return e;
    }

    // omega^k reduced into the power basis.
    static CyclotomicElement root_power(unsigned n, long k) {
        CyclotomicElement e = zero(n);
        long r = k % static_cast<long>(n);
        if (r < 0) r += n;
        if (r == static_cast<long>(n) - 1) {
            for (auto& c : e.co_) c = BigRational(-1);
        } else {
            e.co_[static_cast<size_t>(r)] = 1;
        }
        return e;
    }

    unsigned order() const { return n_; }
    bool is_attached() const { return n_ != 0; }
    const std::vector<BigRational>& coords() const { return co_; }

    bool is_zero() const {
        for (const auto& c : co_) if (c != 0) return false;
        return true;
    }

    bool operator==(const CyclotomicElement& o) const {
        if (n_ == 0) return o.is_zero();
        if (o.n_ == 0) return is_zero();
        if (n_ != o.n_) throw ConfigError("CyclotomicElement: field mismatch in comparison");
        return co_ == o.co_;
    }
    bool operator!=(const CyclotomicElement& o) const { return !(*this == o); }

    CyclotomicElement operator+(const CyclotomicElement& o) const {
        if (n_ == 0) return o;
        if (o.n_ == 0) return *this;
        check_match(o);
        CyclotomicElement r = *this;
        for (size_t i = 0; i < co_.size(); ++i) r.co_[i] += o.co_[i];
        return r;
    }

    CyclotomicElement operator-(const CyclotomicElement& o) const {
        if (o.n_ == 0) return *this;
        if (n_ == 0) {
            CyclotomicElement r = o;
            for (auto& c : r.co_) c = -c;
            return r;
        }
        check_match(o);
        CyclotomicElement r = *this;
        for (size_t i = 0; i < co_.size(); ++i) r.co_[i] -= o.co_[i];
        return r;
    }

    CyclotomicElement operator*(const CyclotomicElement& o) const {
        if (n_ == 0) return *this;
        if (o.n_ == 0) return o;
        check_match(o);
        // Cyclic convolution of length n, then reduce by subtracting the
        // omega^{n-1} component from every power-basis coordinate.
        size_t n = n_;
        std::vector<BigRational> conv(n, BigRational(0));
        for (size_t i = 0; i < n - 1; ++i) {
            if (co_[i] == 0) continue;
            for (size_t j = 0; j < n - 1; ++j) {
                if (o.co_[j] == 0) continue;
                conv[(i + j) % n] += co_[i] * o.co_[j];
            }
        }
        CyclotomicElement r = zero(n_);
        for (size_t i = 0; i + 1 < n; ++i) r.co_[i] = conv[i] - conv[n - 1];
        return r;
    }

    CyclotomicElement operator*(const BigRational& s) const {
        CyclotomicElement r = *this;
        for (auto& c : r.co_) c *= s;
        return r;
    }

    // Field automorphism omega -> omega^m, gcd(m, n) = 1.
    CyclotomicElement automorphism(unsigned m) const {
        if (n_ == 0) return *this;
        unsigned mr = m % n_;
        if (mr == 0) throw ConfigError("CyclotomicElement: automorphism index divisible by n");
        std::vector<BigRational> conv(n_, BigRational(0));
        for (size_t i = 0; i < co_.size(); ++i) conv[(i * mr) % n_] += co_[i];
        CyclotomicElement r = zero(n_);
        for (size_t i = 0; i + 1 < n_; ++i) r.co_[i] = conv[i] - conv[n_ - 1];
        return r;
    }

    // Complex conjugation omega -> omega^{n-1}.
    CyclotomicElement conjugate() const {
        if (n_ == 0) return *this;
        return automorphism(n_ - 1);
    }

    // Lies in the real subfield K = Q(omega + omega^{-1})?
    bool is_real() const { return n_ == 0 || *this == conjugate(); }

    // Rational part if the element is rational, nothing otherwise.
    std::optional<BigRational> as_rational() const {
        if (n_ == 0) return BigRational(0);
        for (size_t i = 1; i < co_.size(); ++i)
            if (co_[i] != 0) return std::nullopt;
        return co_[0];
    }

    // Tr_{Q(omega)/Q}: rational coordinate picks up n-1, every proper power
    // of omega contributes -1.
    BigRational trace_to_q() const {
        if (n_ == 0) return BigRational(0);
        BigRational t = co_[0] * BigRational(static_cast<long>(n_) - 1);
        for (size_t i = 1; i < co_.size(); ++i) t -= co_[i];
        return t;
    }

    std::complex<double> to_complex() const {
        if (n_ == 0) return {0.0, 0.0};
        long double re = 0, im = 0;
        const long double tau = 6.283185307179586476925286766559L;
        for (size_t i = 0; i < co_.size(); ++i) {
            if (co_[i] == 0) continue;
            long double v = static_cast<long double>(co_[i].get_d());
            re += v * std::cos(tau * i / n_);
            im += v * std::sin(tau * i / n_);
        }
        return {static_cast<double>(re), static_cast<double>(im)};
    }

    std::string to_string() const {
        if (n_ == 0) return "0";
        std::string out;
        for (size_t i = 0; i < co_.size(); ++i) {
            if (co_[i] == 0) continue;
            std::string term = circulant::to_string(co_[i]);
            if (i > 0) {
                term += "*w";
                if (i > 1) term += "^" + std::to_string(i);
            }
            if (out.empty()) out = term;
            else if (term[0] == '-') out += " - " + term.substr(1);
            else out += " + " + term;
        }
        return out.empty() ? "0" : out;
    }

private:
    void check_match(const CyclotomicElement& o) const {
        if (n_ != o.n_) throw ConfigError("CyclotomicElement: field mismatch (" +
                                          std::to_string(n_) + " vs " + std::to_string(o.n_) + ")");
    }

    unsigned n_;
    std::vector<BigRational> co_;
};

using CycPoly = Polynomial<CyclotomicElement>;
using CycMatrix = Matrix<CyclotomicElement>;

// mu_k = 1 + omega^k + omega^{-k}, the kernel eigenvalue family.
inline CyclotomicElement mu_value(unsigned n, long k) {
    return CyclotomicElement::rational(n, BigRational(1)) +
           CyclotomicElement::root_power(n, k) + CyclotomicElement::root_power(n, -k);
}

inline CycPoly to_cyclotomic(const IntPoly& p, unsigned n) {
    std::vector<CyclotomicElement> c(p.coeffs().size());
    for (size_t i = 0; i < c.size(); ++i)
        c[i] = CyclotomicElement::rational(n, BigRational(p.coeffs()[i]));
    return CycPoly(std::move(c));
}

// Cyclotomic polynomial with every coefficient rational -> integer poly.
inline std::optional<IntPoly> cyc_poly_to_integral(const CycPoly& p) {
    std::vector<BigInt> c(p.coeffs().size());
    for (size_t i = 0; i < c.size(); ++i) {
        auto q = p.coeffs()[i].as_rational();
        if (!q || !is_integer(*q)) return std::nullopt;
        c[i] = numerator(*q);
    }
    return IntPoly(std::move(c));
}

// Characteristic polynomial of a matrix over Q(omega) by Faddeev-LeVerrier.
//
// Hot path: entries are cleared to a common denominator L, coordinates are
// carried as length-n integer vectors in the cyclic representation (no
// basis reduction inside products; reduction happens only at trace time,
// where subtracting the omega^{n-1} coordinate lands back in the power
// basis, in which division by k is exact). Coefficients are rescaled by
// powers of L on the way out.
inline CycPoly charpoly_cyclotomic(const CycMatrix& a) {
    if (a.rows() != a.cols()) throw ConfigError("charpoly_cyclotomic: not square");
    size_t d = a.rows();
    if (d == 0) throw ConfigError("charpoly_cyclotomic: empty matrix");
    unsigned n = 0;
    for (size_t i = 0; i < d && n == 0; ++i)
        for (size_t j = 0; j < d && n == 0; ++j)
            if (a.at(i, j).is_attached()) n = a.at(i, j).order();
    if (n == 0) throw ConfigError("charpoly_cyclotomic: no field-attached entries");

    BigInt L = 1;
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j)
            if (a.at(i, j).is_attached())
                for (const auto& q : a.at(i, j).coords())
                    mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), denominator(q).get_mpz_t());

    // Flat coordinate storage: entry (i,j) occupies n consecutive limbs.
    auto slot = [&](std::vector<BigInt>& buf, size_t i, size_t j) { return buf.data() + (i * d + j) * n; };
    auto cslot = [&](const std::vector<BigInt>& buf, size_t i, size_t j) { return buf.data() + (i * d + j) * n; };
    std::vector<BigInt> A(d * d * n);
    for (size_t i = 0; i < d; ++i) {
        for (size_t j = 0; j < d; ++j) {
            const CyclotomicElement& e = a.at(i, j);
            if (!e.is_attached()) continue;
            BigInt* dst = slot(A, i, j);
            for (size_t t = 0; t + 1 < n; ++t) {
                const BigRational& q = e.coords()[t];
                dst[t] = numerator(q) * (L / denominator(q));
            }
        }
    }

    std::vector<BigInt> M = A;
    std::vector<std::vector<BigInt>> coeff(d + 1);
    std::vector<BigInt> work(d * d * n);
    for (size_t k = 1; k <= d; ++k) {
        // Trace, canonicalized into the power basis, then exact /k, negated.
        std::vector<BigInt> tr(n);
        for (size_t i = 0; i < d; ++i) {
            const BigInt* e = cslot(M, i, i);
            for (size_t t = 0; t < n; ++t) tr[t] += e[t];
        }
        std::vector<BigInt> ck(n);
        for (size_t t = 0; t + 1 < n; ++t) {
            BigInt v = tr[t] - tr[n - 1];
            mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(k));
            ck[t] = -v;
        }
        coeff[d - k] = ck;
        if (k == d) break;
        // M <- A * (M + ck I)
        for (size_t i = 0; i < d; ++i) {
            BigInt* e = slot(M, i, i);
            for (size_t t = 0; t < n; ++t) e[t] += ck[t];
        }
        for (auto& v : work) v = 0;
        for (size_t i = 0; i < d; ++i) {
            for (size_t kk = 0; kk < d; ++kk) {
                const BigInt* x = cslot(A, i, kk);
                for (size_t u = 0; u < n; ++u) {
                    if (x[u] == 0) continue;
                    const BigInt* y = cslot(M, kk, 0);
                    BigInt* out = slot(work, i, 0);
                    for (size_t j = 0; j < d; ++j) {
                        const BigInt* yj = y + j * n;
                        BigInt* oj = out + j * n;
                        size_t base = u;
                        for (size_t v = 0; v < n; ++v) {
                            size_t t = base + v;
                            if (t >= n) t -= n;
                            mpz_addmul(oj[t].get_mpz_t(), x[u].get_mpz_t(), yj[v].get_mpz_t());
                        }
                    }
                }
            }
        }
        std::swap(M, work);
    }

    // Assemble with denominators L^{d-j} on the lambda^j coefficient.
    std::vector<CyclotomicElement> asc(d + 1);
    BigInt scale = 1;
    asc[d] = CyclotomicElement::rational(n, BigRational(1));
    for (size_t k = 1; k <= d; ++k) {
        scale *= L;
        std::vector<BigRational> co(n - 1);
        for (size_t t = 0; t + 1 < n; ++t) co[t] = make_rational(coeff[d - k][t], scale);
        asc[d - k] = CyclotomicElement::from_coords(n, std::move(co));
    }
    return CycPoly(std::move(asc));
}

} // namespace circulant
