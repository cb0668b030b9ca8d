#pragma once

// Exact integer and rational scalars plus the word-size modular utilities
// used by the CRT characteristic polynomial path.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "circulant/errors.hpp"

namespace circulant {

using BigInt = mpz_class;
using BigRational = mpq_class;

// mpq_class does not canonicalize num/den constructors on its own.
inline BigRational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw ConfigError("make_rational: zero denominator");
    BigRational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const BigRational& q) {
    return q.get_den() == 1;
}

inline BigInt numerator(const BigRational& q) { return q.get_num(); }
inline BigInt denominator(const BigRational& q) { return q.get_den(); }

inline std::string to_string(const BigInt& v) { return v.get_str(); }

inline std::string to_string(const BigRational& q) {
    if (is_integer(q)) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline BigInt parse_bigint(const std::string& s) {
    return BigInt(s);
}

// floor(sqrt(a)) if a is a perfect square, nothing otherwise.
inline std::optional<BigInt> exact_sqrt(const BigInt& a) {
    if (a < 0) throw ConfigError("exact_sqrt: negative input");
    if (mpz_perfect_square_p(a.get_mpz_t()) == 0) return std::nullopt;
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const BigRational& q) {
    if (q < 0) return false;
    return mpz_perfect_square_p(q.get_num().get_mpz_t()) != 0 &&
           mpz_perfect_square_p(q.get_den().get_mpz_t()) != 0;
}

inline BigInt big_pow(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline size_t bit_length(const BigInt& v) {
    if (v == 0) return 0;
    return mpz_sizeinbase(v.get_mpz_t(), 2);
}

// ---- 64-bit modular arithmetic --------------------------------------------

inline uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline uint64_t addmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    uint64_t s = a + b;
    if (s >= m || s < a) s -= m;
    return s;
}

inline uint64_t submod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return a >= b ? a - b : a + (m - b);
}

inline uint64_t powmod_u64(uint64_t base, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    base %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, base, m);
        base = mulmod_u64(base, base, m);
        e >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin; the fixed witness set decides primality for
// every 64-bit integer.
inline bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

inline uint64_t inverse_mod_prime(uint64_t a, uint64_t p) {
    return powmod_u64(a % p, p - 2, p);
}

// Descending sequence of primes just below 2^62, generated deterministically.
inline std::vector<uint64_t> primes_below_2_62(size_t count) {
    std::vector<uint64_t> out;
    uint64_t candidate = (uint64_t(1) << 62) - 1;
    while (out.size() < count) {
        if (is_prime_u64(candidate)) out.push_back(candidate);
        candidate -= 2;
    }
    return out;
}

inline std::vector<uint64_t> small_primes(size_t count, uint64_t start = 2) {
    std::vector<uint64_t> out;
    uint64_t candidate = start;
    while (out.size() < count) {
        if (is_prime_u64(candidate)) out.push_back(candidate);
        ++candidate;
    }
    return out;
}

// Incremental Chinese remaindering with a symmetric (signed) final lift.
// Residues are folded in the order supplied, so runs are reproducible.
class CrtAccumulator {
public:
    CrtAccumulator() : value_(0), modulus_(1) {}

    void fold(uint64_t residue, uint64_t prime) {
        BigInt p(static_cast<unsigned long>(prime));
        // value' = value + modulus * t  with  t = (residue - value) / modulus mod p
        BigInt cur = value_ % p;
        if (cur < 0) cur += p;
        uint64_t cur64 = cur.get_ui();
        uint64_t mod64 = static_cast<uint64_t>(mpz_fdiv_ui(modulus_.get_mpz_t(), prime));
        uint64_t diff = submod_u64(residue % prime, cur64, prime);
        uint64_t t = mulmod_u64(diff, inverse_mod_prime(mod64, prime), prime);
        value_ += modulus_ * BigInt(static_cast<unsigned long>(t));
        modulus_ *= p;
    }

    const BigInt& modulus() const { return modulus_; }

    // Representative in (-modulus/2, modulus/2].
    BigInt symmetric() const {
        BigInt half = modulus_ / 2;
        if (value_ > half) return value_ - modulus_;
        return value_;
    }

private:
    BigInt value_;
    BigInt modulus_;
};

} // namespace circulant
