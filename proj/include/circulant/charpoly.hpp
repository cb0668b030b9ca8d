#pragma once

// Exact characteristic polynomials of integer matrices. The workhorse is a
// homomorphic-imaging scheme: Hessenberg reduction and a Hessenberg charpoly
// recurrence modulo a deterministic ladder of 62-bit primes, recombined by
// CRT with a symmetric lift. The prime count is driven by an a-priori bound
// on coefficient size (principal-minor sums bounded via Hadamard) plus one
// guard prime. A direct Faddeev-LeVerrier pass doubles as an internal
// agreement check at small dimension.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "circulant/bigint.hpp"
#include "circulant/errors.hpp"
#include "circulant/matrix.hpp"
#include "circulant/polynomial.hpp"

namespace circulant {

namespace detail {

// Characteristic polynomial of an upper Hessenberg matrix mod p, ascending
// coefficients. Leading-principal-minor recurrence; all p_k are retained
// because every step reaches back through the subdiagonal products.
inline std::vector<uint64_t> hessenberg_charpoly_mod(const std::vector<uint64_t>& h, size_t d, uint64_t p) {
    auto e = [&](size_t i, size_t j) -> uint64_t { return h[i * d + j]; };
    std::vector<std::vector<uint64_t>> pk(d + 1);
    pk[0] = {1};
    for (size_t k = 1; k <= d; ++k) {
        const std::vector<uint64_t>& prev = pk[k - 1];
        std::vector<uint64_t> cur(k + 1, 0);
        // (lambda - h[k][k]) * p_{k-1}
        uint64_t diag = e(k - 1, k - 1);
        for (size_t t = 0; t < prev.size(); ++t) {
            cur[t + 1] = addmod_u64(cur[t + 1], prev[t], p);
            cur[t] = submod_u64(cur[t], mulmod_u64(diag, prev[t], p), p);
        }
        // - h[i][k] * (subdiagonal product rows i+1..k) * p_{i-1}
        uint64_t sub = 1;
        for (size_t i = k - 1; i >= 1; --i) {
            sub = mulmod_u64(sub, e(i, i - 1), p);
            if (sub == 0) break;
            uint64_t coef = mulmod_u64(e(i - 1, k - 1), sub, p);
            if (coef == 0) continue;
            const std::vector<uint64_t>& pi = pk[i - 1];
            for (size_t t = 0; t < pi.size(); ++t)
                cur[t] = submod_u64(cur[t], mulmod_u64(coef, pi[t], p), p);
        }
        pk[k] = std::move(cur);
    }
    return pk[d];
}

// In-place similarity reduction to upper Hessenberg form mod p.
inline void hessenberg_reduce_mod(std::vector<uint64_t>& a, size_t d, uint64_t p) {
    auto e = [&](size_t i, size_t j) -> uint64_t& { return a[i * d + j]; };
    if (d < 3) return;
    for (size_t j = 0; j + 2 < d; ++j) {
        size_t pivot = j + 1;
        while (pivot < d && e(pivot, j) == 0) ++pivot;
        if (pivot == d) continue;
        if (pivot != j + 1) {
            for (size_t t = 0; t < d; ++t) std::swap(e(j + 1, t), e(pivot, t));
            for (size_t t = 0; t < d; ++t) std::swap(e(t, j + 1), e(t, pivot));
        }
        uint64_t inv = inverse_mod_prime(e(j + 1, j), p);
        for (size_t i = j + 2; i < d; ++i) {
            uint64_t f = e(i, j);
            if (f == 0) continue;
            f = mulmod_u64(f, inv, p);
            // Row i minus f * row j+1, then column j+1 plus f * column i:
            // a similarity, so the charpoly is preserved. Columns < j are
            // already zero in both rows.
            for (size_t t = j; t < d; ++t)
                e(i, t) = submod_u64(e(i, t), mulmod_u64(f, e(j + 1, t), p), p);
            for (size_t t = 0; t < d; ++t)
                e(t, j + 1) = addmod_u64(e(t, j + 1), mulmod_u64(f, e(t, i), p), p);
        }
    }
}

inline std::vector<uint64_t> charpoly_mod_prime(const IntMatrix& m, uint64_t p) {
    size_t d = m.rows();
    std::vector<uint64_t> a(d * d);
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j)
            a[i * d + j] = mpz_fdiv_ui(m.at(i, j).get_mpz_t(), p);
    hessenberg_reduce_mod(a, d, p);
    return hessenberg_charpoly_mod(a, d, p);
}

// Upper bound in bits on any charpoly coefficient: |c_{d-k}| is a sum of
// C(d,k) principal k-minors, each at most the product of the k largest row
// norms (Hadamard).
inline double charpoly_coeff_bits(const IntMatrix& m) {
    size_t d = m.rows();
    std::vector<double> log_norms(d);
    for (size_t i = 0; i < d; ++i) {
        BigInt s = 0;
        for (size_t j = 0; j < d; ++j) s += m.at(i, j) * m.at(i, j);
        log_norms[i] = s == 0 ? 0.0 : 0.5 * static_cast<double>(bit_length(s));
    }
    std::sort(log_norms.rbegin(), log_norms.rend());
    double run = 0, best = 0;
    for (size_t k = 1; k <= d; ++k) {
        run += log_norms[k - 1];
        double logC = (std::lgamma(double(d) + 1.0) - std::lgamma(double(k) + 1.0) -
                       std::lgamma(double(d - k) + 1.0)) / std::log(2.0);
        best = std::max(best, logC + run);
    }
    return best + 3;
}

} // namespace detail

inline BigInt div_exact_int(const BigInt& v, unsigned long k) {
    BigInt r;
    mpz_divexact_ui(r.get_mpz_t(), v.get_mpz_t(), k);
    return r;
}

inline BigRational div_exact_int(const BigRational& v, unsigned long k) {
    return v / BigRational(k);
}

// Direct Faddeev-LeVerrier iteration: c_k = -tr(M_k)/k with
// M_{k+1} = A (M_k + c_k I). The divisions are exact by Newton's identities,
// so everything stays in the coefficient ring. Requires T(1).
template <class T>
Polynomial<T> charpoly_faddeev(const Matrix<T>& a) {
    if (a.rows() != a.cols()) throw ConfigError("charpoly_faddeev: not square");
    size_t d = a.rows();
    if (d == 0) throw ConfigError("charpoly_faddeev: empty matrix");
    std::vector<T> asc(d + 1);
    asc[d] = T(1);
    Matrix<T> mk = a;
    for (size_t k = 1; k <= d; ++k) {
        T ck = T() - div_exact_int(mk.trace(), static_cast<unsigned long>(k));
        asc[d - k] = ck;
        if (k == d) break;
        Matrix<T> shifted = mk;
        for (size_t i = 0; i < d; ++i) shifted.at(i, i) = shifted.at(i, i) + ck;
        mk = a * shifted;
    }
    return Polynomial<T>(std::move(asc));
}

// CRT-combined charpoly over the integers, ascending coefficients, monic.
// No rational reconstruction anywhere: residues lift straight to signed
// integers once the prime ladder exceeds the coefficient bound.
inline IntPoly charpoly_exact(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw ConfigError("charpoly_exact: not square");
    size_t d = m.rows();
    if (d == 0) throw ConfigError("charpoly_exact: empty matrix");
    double need_bits = detail::charpoly_coeff_bits(m) + 1;
    size_t nprimes = static_cast<size_t>(need_bits / 61.0) + 2;
    std::vector<uint64_t> primes = primes_below_2_62(nprimes);
    std::vector<CrtAccumulator> acc(d + 1);
    for (uint64_t p : primes) {
        std::vector<uint64_t> cp = detail::charpoly_mod_prime(m, p);
        for (size_t i = 0; i <= d; ++i) acc[i].fold(cp[i], p);
    }
    std::vector<BigInt> c(d + 1);
    for (size_t i = 0; i <= d; ++i) c[i] = acc[i].symmetric();
    IntPoly result(std::move(c));
    if (d <= 64) {
        IntPoly direct = charpoly_faddeev(m);
        if (!(direct == result))
            throw StructuralError("charpoly_exact: CRT and Faddeev-LeVerrier disagree",
                                  to_pretty_string(result), to_pretty_string(direct));
    }
    return result;
}

} // namespace circulant
