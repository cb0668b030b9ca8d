#pragma once

// Exact factorization of the transfer characteristic polynomial through the
// cyclic Fourier blocks, plus an irreducibility sieve over small primes.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "circulant/bigint.hpp"
#include "circulant/charpoly.hpp"
#include "circulant/cyclotomic.hpp"
#include "circulant/errors.hpp"
#include "circulant/graph.hpp"
#include "circulant/matrix.hpp"
#include "circulant/modpoly.hpp"
#include "circulant/polynomial.hpp"
#include "circulant/symmetry.hpp"
#include "circulant/transfer.hpp"

namespace circulant {

namespace detail {

// Monic gcd over Q by plain Euclid. Fine for the small degrees it sees; the
// sieve certifies squarefreeness with a modular shortcut first.
inline RatPoly rational_gcd(RatPoly a, RatPoly b) {
    while (!b.is_zero()) {
        auto [q, r] = divrem(a, b);
        (void)q;
        a = b;
        b = r;
    }
    if (a.is_zero()) return a;
    BigRational inv = BigRational(1) / a.lead();
    return a * inv;
}

inline IntPoly primitive_from_rational(const RatPoly& p) {
    BigInt lcm = 1;
    for (const auto& c : p.coeffs()) lcm = lcm / gcd(lcm, denominator(c)) * denominator(c);
    std::vector<BigInt> ints;
    ints.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) ints.push_back(numerator(c) * (lcm / denominator(c)));
    return primitive_part(IntPoly(std::move(ints)));
}

// Yun's squarefree decomposition over Q; returns primitive parts with their
// multiplicities, ordered by multiplicity.
inline std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& f) {
    if (f.is_zero() || f.degree() < 1) throw ConfigError("squarefree_decomposition: needs degree >= 1");
    RatPoly fr = to_rational(f);
    RatPoly df = to_rational(derivative(f));
    RatPoly g = rational_gcd(fr, df);
    std::vector<std::pair<IntPoly, int>> out;
    if (g.degree() < 1) {
        out.emplace_back(primitive_part(f), 1);
        return out;
    }
    RatPoly w = divrem(fr, g).first;
    RatPoly y = divrem(df, g).first;
    auto rat_derivative = [](const RatPoly& p) {
        std::vector<BigRational> c;
        for (size_t i = 1; i < p.coeffs().size(); ++i) c.push_back(p.coeffs()[i] * BigRational(static_cast<long>(i)));
        return RatPoly(std::move(c));
    };
    RatPoly z = y - rat_derivative(w);
    int i = 1;
    while (w.degree() > 0) {
        RatPoly a = rational_gcd(w, z);
        if (a.degree() > 0) out.emplace_back(primitive_from_rational(a), i);
        w = divrem(w, a).first;
        y = divrem(z, a).first;
        z = y - rat_derivative(w);
        ++i;
    }
    return out;
}

// Fujiwara bound on root magnitudes, rounded up. Infinite on overflow.
inline double root_bound(const IntPoly& f) {
    double lead = std::abs(f.lead().get_d());
    double best = 0;
    int d = f.degree();
    for (int k = 1; k <= d; ++k) {
        double a = std::abs(f.coeff(d - k).get_d()) / lead;
        if (k == d) a *= 0.5;
        best = std::max(best, std::pow(a, 1.0 / k));
    }
    return 2.0 * best;
}

} // namespace detail

// All integer roots of f (with multiplicity stripped by the caller), found
// by scanning divisors of the constant term inside the Fujiwara bound.
// Returns nothing when the scan range is unreasonably large.
inline std::optional<std::vector<BigInt>> integer_roots(const IntPoly& f) {
    if (f.is_zero()) throw ConfigError("integer_roots: zero polynomial");
    IntPoly work = f;
    std::vector<BigInt> roots;
    if (work.valuation() > 0) {
        roots.push_back(0);
        work = IntPoly(std::vector<BigInt>(work.coeffs().begin() + work.valuation(), work.coeffs().end()));
    }
    if (work.degree() < 1) return roots;
    double bound = detail::root_bound(work);
    if (!(bound < 2097152.0)) return std::nullopt;
    long limit = static_cast<long>(bound) + 1;
    const BigInt& constant = work.coeff(0);
    for (long r = -limit; r <= limit; ++r) {
        if (r == 0) continue;
        if (!mpz_divisible_ui_p(constant.get_mpz_t(), static_cast<unsigned long>(r < 0 ? -r : r))) continue;
        if (work.evaluate(BigInt(r)) == 0) roots.push_back(r);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

enum class SieveVerdict { irreducible, factored, unresolved };

inline const char* sieve_verdict_name(SieveVerdict v) {
    switch (v) {
        case SieveVerdict::irreducible: return "irreducible";
        case SieveVerdict::factored: return "factored";
        default: return "unresolved";
    }
}

struct SievePiece {
    IntPoly poly;
    int multiplicity = 1;
    bool proven_irreducible = false;
    std::string method;
    std::vector<uint64_t> primes;                // modular evidence, when used
    std::vector<std::vector<int>> patterns;      // factor degree patterns per prime
    std::vector<int> surviving_degrees;          // possible proper factor degrees left open
};

struct SieveReport {
    IntPoly input;
    BigInt scale; // input = scale * prod pieces^multiplicity
    std::vector<SievePiece> pieces;
    SieveVerdict verdict = SieveVerdict::unresolved;
};

namespace detail {

// Degree-pattern analysis of one squarefree primitive polynomial. Proves
// irreducibility when the patterns over several good primes rule out every
// proper factor degree.
inline SievePiece analyze_squarefree(const IntPoly& q, int multiplicity, int prime_count) {
    SievePiece piece;
    piece.poly = q;
    piece.multiplicity = multiplicity;
    int d = q.degree();
    if (d <= 1) {
        piece.proven_irreducible = true;
        piece.method = "degree one";
        return piece;
    }
    if (d <= 3) {
        // no rational roots were left by the caller, so degree 2 or 3 is done
        piece.proven_irreducible = true;
        piece.method = "low degree without rational roots";
        return piece;
    }

    std::vector<char> alive(static_cast<size_t>(d), 1); // proper degrees 1..d-1 at indices 1..d-1
    alive[0] = 0;
    int good = 0;
    uint64_t p = 1;
    while (good < prime_count) {
        p = p + 1;
        while (!is_prime_u64(p)) ++p;
        if (p > 10000) break;
        if (mpz_divisible_ui_p(q.lead().get_mpz_t(), p)) continue;
        PrimeFieldPoly qp = reduce_mod(q, p);
        PrimeFieldPoly gp = fp_gcd(qp, fp_derivative(qp));
        if (!gp.is_one()) continue; // not squarefree mod p, skip
        ModFactorization fac = factor_mod_p(qp);
        std::vector<int> pattern = fac.degree_pattern();
        piece.primes.push_back(p);
        piece.patterns.push_back(pattern);
        ++good;

        // subset sums of the pattern = degrees of monic divisors mod p
        std::vector<char> reach(static_cast<size_t>(d) + 1, 0);
        reach[0] = 1;
        for (int part : pattern)
            for (int s = d - part; s >= 0; --s)
                if (reach[s]) reach[s + part] = 1;
        for (int deg = 1; deg < d; ++deg)
            if (!reach[deg]) alive[static_cast<size_t>(deg)] = 0;

        bool any = false;
        for (int deg = 1; deg < d; ++deg) any = any || alive[static_cast<size_t>(deg)];
        if (!any) {
            piece.proven_irreducible = true;
            piece.method = "modular degree sieve";
            return piece;
        }
    }
    piece.method = "unresolved";
    for (int deg = 1; deg < d; ++deg)
        if (alive[static_cast<size_t>(deg)]) piece.surviving_degrees.push_back(deg);
    return piece;
}

} // namespace detail

// Splits f as far as rational roots, supplied candidate divisors, and
// squarefree structure allow, then attacks each remaining piece with the
// modular degree sieve. Never reports a factorization it has not verified by
// exact division.
inline SieveReport irreducibility_sieve(const IntPoly& f, const std::vector<IntPoly>& candidates = {},
                                        int prime_count = 25) {
    if (f.is_zero() || f.degree() < 1) throw ConfigError("irreducibility_sieve: needs degree >= 1");
    SieveReport rep;
    rep.input = f;
    rep.scale = content(f);
    if (f.lead() < 0) rep.scale = -rep.scale;

    IntPoly work = primitive_part(f);

    // cheap modular certificate that f is squarefree, to dodge the rational
    // gcd on large inputs
    bool squarefree = false;
    {
        uint64_t p = 1;
        for (int tries = 0; tries < 25 && !squarefree; ++tries) {
            p = p + 1;
            while (!is_prime_u64(p)) ++p;
            if (mpz_divisible_ui_p(work.lead().get_mpz_t(), p)) continue;
            PrimeFieldPoly wp = reduce_mod(work, p);
            squarefree = fp_gcd(wp, fp_derivative(wp)).is_one();
        }
    }
    std::vector<std::pair<IntPoly, int>> parts;
    if (squarefree) parts.emplace_back(work, 1);
    else parts = detail::squarefree_decomposition(work);

    for (auto& [part, mult] : parts) {
        IntPoly rest = part;

        if (auto roots = integer_roots(rest)) {
            for (const BigInt& r : *roots) {
                IntPoly linear(std::vector<BigInt>{-r, 1});
                rest = exact_divide(rest, linear);
                SievePiece piece;
                piece.poly = linear;
                piece.multiplicity = mult;
                piece.proven_irreducible = true;
                piece.method = "integer root";
                rep.pieces.push_back(std::move(piece));
            }
        }

        for (const IntPoly& cand : candidates) {
            if (cand.degree() < 1) continue;
            while (rest.degree() >= cand.degree() && divides(cand, rest)) {
                rest = exact_divide(rest, cand);
                SievePiece piece;
                piece.poly = primitive_part(cand);
                piece.multiplicity = mult;
                piece.proven_irreducible = true;
                piece.method = "supplied candidate";
                rep.pieces.push_back(std::move(piece));
            }
        }

        if (rest.degree() >= 1)
            rep.pieces.push_back(detail::analyze_squarefree(primitive_part(rest), mult, prime_count));
    }

    // merge equal pieces; candidates can repeat across multiplicity levels
    std::vector<SievePiece> merged;
    for (auto& piece : rep.pieces) {
        bool folded = false;
        for (auto& m : merged)
            if (m.poly == piece.poly && m.proven_irreducible == piece.proven_irreducible) {
                m.multiplicity += piece.multiplicity;
                folded = true;
                break;
            }
        if (!folded) merged.push_back(std::move(piece));
    }
    rep.pieces = std::move(merged);

    bool all_proven = true;
    int total_factors = 0;
    for (const auto& piece : rep.pieces) {
        all_proven = all_proven && piece.proven_irreducible;
        total_factors += piece.multiplicity;
    }
    if (!all_proven) rep.verdict = SieveVerdict::unresolved;
    else rep.verdict = total_factors == 1 ? SieveVerdict::irreducible : SieveVerdict::factored;

    // reconstruction check
    IntPoly product = IntPoly::constant(rep.scale);
    for (const auto& piece : rep.pieces)
        for (int i = 0; i < piece.multiplicity; ++i) product = product * piece.poly;
    if (product != f)
        throw StructuralError("irreducibility_sieve: reconstruction failed", to_pretty_string(product), to_pretty_string(f));
    return rep;
}

// Reduction of f modulo a run of small primes: full factor degree pattern
// plus the roots. A prime is good when it keeps the leading coefficient and
// the squarefree structure.
struct ModReduction {
    uint64_t p = 0;
    bool good = false;
    std::vector<int> pattern;
    std::vector<uint64_t> roots;
};

namespace detail {

inline ModReduction mod_reduction_row(const IntPoly& f, uint64_t p) {
    ModReduction row;
    row.p = p;
    if (mpz_divisible_ui_p(f.lead().get_mpz_t(), p)) {
        row.good = false;
        return row;
    }
    PrimeFieldPoly fp = reduce_mod(f, p);
    ModFactorization fac = factor_mod_p(fp);
    row.pattern = fac.degree_pattern();
    row.roots = fac.roots();
    row.good = fp_gcd(fp, fp_derivative(fp)).is_one();
    return row;
}

} // namespace detail

inline std::vector<ModReduction> small_primes_table(const IntPoly& f, int count = 12) {
    if (f.is_zero() || f.degree() < 1) throw ConfigError("small_primes_table: needs degree >= 1");
    std::vector<ModReduction> out;
    uint64_t p = 1;
    while (static_cast<int>(out.size()) < count && p < 10000) {
        p = p + 1;
        while (!is_prime_u64(p)) ++p;
        out.push_back(detail::mod_reduction_row(f, p));
    }
    return out;
}

inline std::vector<ModReduction> small_primes_table(const IntPoly& f, const std::vector<uint64_t>& primes) {
    if (f.is_zero() || f.degree() < 1) throw ConfigError("small_primes_table: needs degree >= 1");
    std::vector<ModReduction> out;
    out.reserve(primes.size());
    for (uint64_t p : primes) {
        if (!is_prime_u64(p)) throw ConfigError("small_primes_table: " + std::to_string(p) + " is not prime");
        out.push_back(detail::mod_reduction_row(f, p));
    }
    return out;
}

// One Fourier mode of the block-diagonalized operator.
struct ModeSummary {
    int k = 0;
    int dimension = 0;   // size of the block
    int kernel_dim = 0;  // power of lambda split off the block charpoly
    CycPoly factor;      // monic nonvanishing part, coefficients in the real subfield
};

struct FactorizationReport {
    int n = 0;
    int states = 0;
    int nu = 0;              // total lambda power
    int orbit_kernel_dim = 0;
    IntPoly chi_transfer;
    IntPoly chi_orbit;       // charpoly of the mode-0 block (rotation orbits)
    IntPoly anomalous;       // f_anom, the nonvanishing orbit-sector factor
    IntPoly cyclotomic;      // f_cyc, rational product over one mode per conjugate pair
    std::vector<ModeSummary> modes;
    std::vector<int> mode_degrees;
};

namespace detail {

inline std::string poly_digest(const IntPoly& p) {
    std::string s = "deg " + std::to_string(p.degree());
    int shown = 0;
    for (int i = 0; i <= p.degree() && shown < 4; ++i) {
        if (p.coeff(i) == 0) continue;
        s += " [" + std::to_string(i) + "]=" + to_string(p.coeff(i));
        ++shown;
    }
    return s;
}

} // namespace detail

// Combines the full characteristic polynomial, the orbit-sector polynomial,
// and the per-mode block polynomials into chi_T = lambda^nu f_anom f_cyc^2.
// Both the block product and the square-root route must agree, and the
// product identity is verified against chi_T coefficient by coefficient.
inline FactorizationReport assemble_factorization(const IntPoly& chi_transfer, const IntPoly& chi_orbit,
                                                  const std::vector<CycPoly>& mode_charpolys, int n) {
    if (chi_transfer.is_zero() || chi_transfer.lead() != 1)
        throw ConfigError("assemble_factorization: chi_transfer must be monic");
    if (chi_orbit.is_zero() || chi_orbit.lead() != 1)
        throw ConfigError("assemble_factorization: chi_orbit must be monic");
    if (static_cast<int>(mode_charpolys.size()) != (n - 1) / 2)
        throw ConfigError("assemble_factorization: expected one block per conjugate mode pair");

    FactorizationReport rep;
    rep.n = n;
    rep.states = chi_transfer.degree();
    rep.chi_transfer = chi_transfer;
    rep.chi_orbit = chi_orbit;

    rep.orbit_kernel_dim = chi_orbit.valuation();
    rep.anomalous = IntPoly(std::vector<BigInt>(chi_orbit.coeffs().begin() + rep.orbit_kernel_dim,
                                                chi_orbit.coeffs().end()));

    CycPoly block_product = CycPoly(std::vector<CyclotomicElement>{CyclotomicElement::rational(n, BigRational(1))});
    int cyclic_kernel = 0;
    for (size_t idx = 0; idx < mode_charpolys.size(); ++idx) {
        const CycPoly& chi = mode_charpolys[idx];
        if (chi.is_zero()) throw ConfigError("assemble_factorization: zero mode polynomial");
        int z = chi.valuation();
        std::vector<CyclotomicElement> tail(chi.coeffs().begin() + z, chi.coeffs().end());
        ModeSummary mode;
        mode.k = static_cast<int>(idx) + 1;
        mode.dimension = chi.degree();
        mode.kernel_dim = z;
        mode.factor = CycPoly(std::move(tail));
        block_product = block_product * mode.factor;
        cyclic_kernel += z;
        rep.mode_degrees.push_back(mode.factor.degree());
        rep.modes.push_back(std::move(mode));
    }

    auto rational_product = cyc_poly_to_integral(block_product);
    if (!rational_product)
        throw StructuralError("assemble_factorization: mode product is not rational",
                              "product over modes k = 1 .. (n-1)/2", "integer polynomial");
    rep.cyclotomic = *rational_product;
    rep.nu = rep.orbit_kernel_dim + 2 * cyclic_kernel;

    IntPoly recombined = (rep.anomalous * rep.cyclotomic * rep.cyclotomic).shifted(rep.nu);
    if (recombined != chi_transfer)
        throw StructuralError("assemble_factorization: product identity failed",
                              detail::poly_digest(recombined), detail::poly_digest(chi_transfer));

    // independent route: divide chi_T by the anomalous part and take an
    // exact polynomial square root
    IntPoly quotient = exact_divide(chi_transfer,
                                    rep.anomalous.shifted(rep.nu));
    auto root = poly_square_root(quotient);
    if (!root || *root != rep.cyclotomic)
        throw StructuralError("assemble_factorization: square-root route disagrees",
                              root ? detail::poly_digest(*root) : std::string("no square root"),
                              detail::poly_digest(rep.cyclotomic));

    return rep;
}

// The whole pipeline for one circulant: exact charpoly of the full transfer
// matrix, the orbit compression, all Fourier blocks, and the assembled
// factorization.
inline FactorizationReport compute_factorization(const CirculantSpec& spec) {
    if (!is_prime_u64(static_cast<uint64_t>(spec.n)))
        throw ConfigError("compute_factorization: needs prime n");
    StateSet states = enumerate_states(spec);
    ClosedKernel kernel = ClosedKernel::from(spec);
    OrbitDecomposition dec = orbit_decompose(states);
    TransferMatrix t = build_transfer(states, kernel);

    IntPoly chi_transfer = charpoly_exact(t.m);
    OrbitMatrix om = rotation_orbit_transfer(states, dec, kernel);
    IntPoly chi_orbit = charpoly_exact(om.counts);

    std::vector<CycPoly> mode_charpolys;
    for (int k = 1; k <= (spec.n - 1) / 2; ++k)
        mode_charpolys.push_back(charpoly_cyclotomic(fourier_block(dec, kernel, k).m));

    return assemble_factorization(chi_transfer, chi_orbit, mode_charpolys, spec.n);
}

} // namespace circulant
