#pragma once

// Self-checks that cross independently computed quantities against each
// other. Each check reports pass, fail, or skip; exceptions inside a check
// fail that check without aborting the run.

#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "circulant/factorization.hpp"
#include "circulant/graph.hpp"
#include "circulant/oracle.hpp"
#include "circulant/symmetry.hpp"
#include "circulant/transfer.hpp"

namespace circulant {

enum class CheckStatus { passed, failed, skipped };

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::skipped;
    std::string detail;
};

struct VerificationReport {
    CirculantSpec spec;
    std::vector<CheckResult> checks;

    bool all_passed() const {
        for (const auto& c : checks)
            if (c.status == CheckStatus::failed) return false;
        return true;
    }
    int count(CheckStatus s) const {
        int k = 0;
        for (const auto& c : checks)
            if (c.status == s) ++k;
        return k;
    }
};

struct VerificationOptions {
    std::vector<int> depths{2, 3, 4};
    bool with_oracle = true;
    bool with_factorization = false; // heavy for larger n, opt in
    int oracle_cap = 0;              // 0 = library default
};

namespace detail {

// thrown inside a check body to mark it skipped rather than failed
struct SkipCheck {
    std::string reason;
    explicit SkipCheck(std::string r) : reason(std::move(r)) {}
};

inline void run_check(VerificationReport& rep, const std::string& name,
                      const std::function<std::string()>& body) {
    CheckResult r;
    r.name = name;
    try {
        r.detail = body();
        r.status = CheckStatus::passed;
    } catch (const detail::SkipCheck& s) {
        r.status = CheckStatus::skipped;
        r.detail = s.reason;
    } catch (const std::exception& e) {
        r.status = CheckStatus::failed;
        r.detail = e.what();
    }
    rep.checks.push_back(std::move(r));
}

} // namespace detail

inline VerificationReport run_verification(const CirculantSpec& spec, const VerificationOptions& opt = {}) {
    VerificationReport rep;
    rep.spec = spec;

    StateSet states = enumerate_states(spec);
    ClosedKernel kernel = ClosedKernel::from(spec);
    OrbitDecomposition dec = orbit_decompose(states);
    TransferMatrix t = build_transfer(states, kernel);
    WeightedTransfer wt = weighted_transfer(t);
    OrbitMatrix om = orbit_transfer(states, dec, kernel);
    bool prime = is_prime_u64(static_cast<uint64_t>(spec.n));

    detail::run_check(rep, "state enumeration vs subset scan", [&]() -> std::string {
        if (spec.n > 22) throw detail::SkipCheck("n > 22, scan too large");
        uint64_t count = 0;
        for (uint64_t s = 0; s <= full_mask(spec.n); ++s) {
            bool ok = true;
            for (int c : spec.connection_list())
                if ((s & rotate_state(s, c, spec.n)) != 0) { ok = false; break; }
            if (ok) ++count;
        }
        if (count != states.states.size())
            throw StructuralError("state count mismatch", std::to_string(count),
                                  std::to_string(states.states.size()));
        return std::to_string(count) + " states";
    });

    detail::run_check(rep, "transfer matrix symmetry", [&]() -> std::string {
        if (!(t.m == t.m.transpose()))
            throw StructuralError("transfer not symmetric", "T", "T^T");
        return std::to_string(t.m.rows()) + " x " + std::to_string(t.m.cols());
    });

    detail::run_check(rep, "dihedral equivariance of compatibility", [&]() -> std::string {
        size_t m = states.states.size();
        size_t step = m * m > 40000 ? 13 : 1;
        size_t tested = 0;
        for (const DihedralElement& g : dihedral_elements(spec.n))
            for (size_t a = 0; a < m; a += step)
                for (size_t b = a; b < m; b += step) {
                    bool lhs = compatible(states.states[a], states.states[b], kernel);
                    bool rhs = compatible(g.apply_state(states.states[a]),
                                          g.apply_state(states.states[b]), kernel);
                    if (lhs != rhs)
                        throw StructuralError("equivariance failed at pair",
                                              std::to_string(a), std::to_string(b));
                    ++tested;
                }
        return std::to_string(tested) + " pairs across " + std::to_string(2 * spec.n) + " group elements";
    });

    detail::run_check(rep, "Burnside orbit counts", [&]() -> std::string {
        BigInt fix_rot = 0, fix_all = 0;
        for (const DihedralElement& g : dihedral_elements(spec.n)) {
            BigInt fixed = 0;
            for (uint64_t s : states.states)
                if (g.apply_state(s) == s) fixed += 1;
            fix_all += fixed;
            if (!g.reflected) fix_rot += fixed;
        }
        BigInt orbits = fix_all / (2 * spec.n);
        BigInt rot_orbits = fix_rot / spec.n;
        if (orbits * (2 * spec.n) != fix_all || orbits != BigInt(dec.orbits.size()))
            throw StructuralError("dihedral Burnside", to_string(orbits), std::to_string(dec.orbits.size()));
        if (rot_orbits * spec.n != fix_rot || rot_orbits != BigInt(dec.rotation_orbits.size()))
            throw StructuralError("rotation Burnside", to_string(rot_orbits),
                                  std::to_string(dec.rotation_orbits.size()));
        return to_string(orbits) + " dihedral, " + to_string(rot_orbits) + " rotation orbits";
    });

    for (int d : opt.depths) {
        detail::run_check(rep, "strip d=" + std::to_string(d) + " full vs orbit", [&]() -> std::string {
            IntPoly full = strip_polynomial(wt, d);
            IntPoly orbit = strip_polynomial(om, d);
            if (full != orbit)
                throw StructuralError("strip disagreement", to_pretty_string(full), to_pretty_string(orbit));
            return "I(1) = " + to_string(full.evaluate(BigInt(1)));
        });
    }

    for (int d : opt.depths) {
        if (d < 2) continue;
        detail::run_check(rep, "torus d=" + std::to_string(d) + " vs sector traces", [&]() -> std::string {
            if (!prime || spec.n % 2 == 0) throw detail::SkipCheck("needs odd prime n");
            IntPoly torus = torus_polynomial(wt, d);
            SectorTraces sectors = sector_traces(dec, kernel, d);
            IntPoly sum = sectors.anomalous + sectors.cyclotomic;
            if (sum != torus)
                throw StructuralError("sector sum disagreement", to_pretty_string(sum), to_pretty_string(torus));
            return "I(1) = " + to_string(torus.evaluate(BigInt(1)));
        });
    }

    if (opt.with_oracle) {
        for (int d : opt.depths) {
            for (Boundary b : {Boundary::strip, Boundary::torus}) {
                if (b == Boundary::torus && d < 2) continue;
                std::string name = std::string(boundary_name(b)) + " d=" + std::to_string(d) + " vs oracle";
                detail::run_check(rep, name, [&]() -> std::string {
                    int cap = opt.oracle_cap > 0 ? opt.oracle_cap : default_oracle_cap();
                    if (spec.n * d > cap)
                        throw detail::SkipCheck("n*d = " + std::to_string(spec.n * d) + " above oracle cap " +
                                        std::to_string(cap));
                    LayeredCheck check = layered_equivalence_check(spec, d, b, cap);
                    if (!check.match)
                        throw StructuralError("oracle disagreement", to_pretty_string(check.layered),
                                              to_pretty_string(check.brute));
                    IndependencePolynomial viaT = independence_polynomial(spec, d, b);
                    if (viaT.poly != check.brute)
                        throw StructuralError("transfer vs oracle", to_pretty_string(viaT.poly),
                                              to_pretty_string(check.brute));
                    return "I(1) = " + to_string(check.brute.evaluate(BigInt(1)));
                });
            }
        }
    }

    detail::run_check(rep, "multiplicity accounting", [&]() -> std::string {
        if (!prime || spec.n == 2) throw detail::SkipCheck("needs odd prime n");
        MultiplicityReport m = multiplicity_accounting(states, dec);
        std::ostringstream os;
        os << "trivial " << m.trivial << ", sign " << m.sign << ", pairs";
        for (const BigInt& v : m.two_dim) os << " " << v;
        return os.str();
    });

    detail::run_check(rep, "kernel spectrum", [&]() -> std::string {
        KernelSpectrum ks = fourier_of_kernel(spec);
        int expect = spec.n - kernel.size();
        if (ks.exact) {
            auto zero = ks.values[0];
            auto q = zero.as_rational();
            if (!q || *q != BigRational(expect))
                throw StructuralError("kernel spectrum at 0", zero.to_string(), std::to_string(expect));
            CyclotomicElement total = CyclotomicElement::zero(spec.n);
            for (const auto& v : ks.values) total = total + v;
            auto tq = total.as_rational();
            if (!tq || *tq != 0)
                throw StructuralError("kernel spectrum sum", total.to_string(), "0");
        } else {
            if (std::abs(ks.numeric[0].real() - expect) > 1e-9 || std::abs(ks.numeric[0].imag()) > 1e-9)
                throw StructuralError("kernel spectrum at 0", std::to_string(ks.numeric[0].real()),
                                      std::to_string(expect));
        }
        return "c-hat(0) = " + std::to_string(expect) + (ks.exact ? ", exact" : ", numeric");
    });

    detail::run_check(rep, "block trace identity", [&]() -> std::string {
        if (!prime || spec.n % 2 == 0) throw detail::SkipCheck("needs odd prime n");
        if (states.count() > 250) throw detail::SkipCheck("state space too large for the full block sweep");
        for (int d = 1; d <= 4; ++d) {
            BigInt full = trace_of_power(t.m, d);
            CyclotomicElement acc = CyclotomicElement::zero(spec.n);
            FourierBlock b0 = fourier_block(dec, kernel, 0);
            acc = acc + trace_of_power(b0.m, d);
            for (int k = 1; k < spec.n; ++k) {
                FourierBlock bk = fourier_block(dec, kernel, std::min(k, spec.n - k));
                CycMatrix mk = k <= (spec.n - 1) / 2 ? bk.m : bk.m.transpose();
                acc = acc + trace_of_power(mk, d);
            }
            auto q = acc.as_rational();
            if (!q || *q != BigRational(full))
                throw StructuralError("trace identity at d=" + std::to_string(d), acc.to_string(),
                                      to_string(full));
        }
        return "d = 1..4";
    });

    if (opt.with_factorization) {
        detail::run_check(rep, "characteristic polynomial factorization", [&]() -> std::string {
            if (!prime || spec.n % 2 == 0) throw detail::SkipCheck("needs odd prime n");
            FactorizationReport f = compute_factorization(spec);
            std::ostringstream os;
            os << "nu = " << f.nu << ", deg f_anom = " << f.anomalous.degree()
               << ", deg f_cyc = " << f.cyclotomic.degree();
            return os.str();
        });
    }

    return rep;
}

} // namespace circulant
