#pragma once

// Dihedral symmetry of the layer states: orbit decomposition, the
// orbit-counting transfer matrix, cyclic Fourier blocks over Q(w), and
// character-theoretic multiplicity accounting.

#include <algorithm>
#include <vector>

#include "circulant/bigint.hpp"
#include "circulant/cyclotomic.hpp"
#include "circulant/errors.hpp"
#include "circulant/graph.hpp"
#include "circulant/matrix.hpp"
#include "circulant/polynomial.hpp"

namespace circulant {

// Element of the dihedral group D_n acting on Z_n: j -> sign * j + rotation,
// with sign = -1 exactly when reflected.
struct DihedralElement {
    int n = 0;
    int rotation = 0;
    bool reflected = false;

    int apply(int j) const {
        int img = reflected ? rotation - j : rotation + j;
        img %= n;
        if (img < 0) img += n;
        return img;
    }

    uint64_t apply_state(uint64_t s) const {
        uint64_t img = reflected ? reflect_state(s, n) : s;
        return rotate_state(img, rotation, n);
    }

    // this after other: (a.compose(b)).apply(j) == a.apply(b.apply(j)).
    DihedralElement compose(const DihedralElement& other) const {
        if (n != other.n) throw ConfigError("DihedralElement: group order mismatch");
        int sign = reflected ? -1 : 1;
        int r = sign * other.rotation + rotation;
        r %= n;
        if (r < 0) r += n;
        return {n, r, reflected != other.reflected};
    }

    DihedralElement inverse() const {
        if (reflected) return *this;
        return {n, (n - rotation) % n, false};
    }

    bool operator==(const DihedralElement& o) const {
        return n == o.n && rotation == o.rotation && reflected == o.reflected;
    }
};

// All 2n elements: rotations first, then reflections, each by rotation part.
inline std::vector<DihedralElement> dihedral_elements(int n) {
    std::vector<DihedralElement> out;
    out.reserve(2 * n);
    for (int r = 0; r < n; ++r) out.push_back({n, r, false});
    for (int r = 0; r < n; ++r) out.push_back({n, r, true});
    return out;
}

struct DihedralOrbit {
    uint64_t representative = 0; // smallest member mask
    int weight = 0;
    int size = 0;
    int rotation_orbit_size = 0;
    bool reflection_closed = false;
    std::vector<int> members; // state indices, ascending
};

struct RotationOrbit {
    uint64_t representative = 0;
    int weight = 0;
    int size = 0;
    int dihedral_index = -1;
    std::vector<int> members;
};

struct OrbitDecomposition {
    int n = 0;
    std::vector<DihedralOrbit> orbits;
    std::vector<RotationOrbit> rotation_orbits;
    std::vector<int> state_to_orbit;
    std::vector<int> state_to_rotation_orbit;

    // Rotation orbits of full length n; everything else for prime n is the
    // empty state alone.
    std::vector<int> free_rotation_orbits() const {
        std::vector<int> out;
        for (size_t i = 0; i < rotation_orbits.size(); ++i)
            if (rotation_orbits[i].size == n) out.push_back(static_cast<int>(i));
        return out;
    }
};

inline OrbitDecomposition orbit_decompose(const StateSet& states) {
    int n = states.spec.n;
    int count = states.count();
    OrbitDecomposition dec;
    dec.n = n;
    dec.state_to_orbit.assign(count, -1);
    dec.state_to_rotation_orbit.assign(count, -1);

    // States are sorted by (weight, mask), so the first unassigned state of
    // an orbit is its minimal-mask member; processing in order therefore
    // yields orbit lists already sorted by (weight, representative).
    for (int i = 0; i < count; ++i) {
        if (dec.state_to_rotation_orbit[i] >= 0) continue;
        RotationOrbit ro;
        ro.representative = states.states[i];
        ro.weight = states.weights[i];
        for (int r = 0; r < n; ++r) {
            int idx = states.index_of(rotate_state(states.states[i], r, n));
            if (dec.state_to_rotation_orbit[idx] < 0) {
                dec.state_to_rotation_orbit[idx] = static_cast<int>(dec.rotation_orbits.size());
                ro.members.push_back(idx);
            }
        }
        std::sort(ro.members.begin(), ro.members.end());
        ro.size = static_cast<int>(ro.members.size());
        dec.rotation_orbits.push_back(std::move(ro));
    }

    for (int i = 0; i < count; ++i) {
        if (dec.state_to_orbit[i] >= 0) continue;
        DihedralOrbit orb;
        orb.representative = states.states[i];
        orb.weight = states.weights[i];
        uint64_t reflected = reflect_state(states.states[i], n);
        for (int r = 0; r < n; ++r) {
            for (uint64_t base : {states.states[i], reflected}) {
                int idx = states.index_of(rotate_state(base, r, n));
                if (dec.state_to_orbit[idx] < 0) {
                    dec.state_to_orbit[idx] = static_cast<int>(dec.orbits.size());
                    orb.members.push_back(idx);
                }
            }
        }
        std::sort(orb.members.begin(), orb.members.end());
        orb.size = static_cast<int>(orb.members.size());
        orb.rotation_orbit_size = dec.rotation_orbits[dec.state_to_rotation_orbit[i]].size;
        orb.reflection_closed = (orb.size == orb.rotation_orbit_size);
        dec.orbits.push_back(std::move(orb));
    }

    for (size_t r = 0; r < dec.rotation_orbits.size(); ++r)
        dec.rotation_orbits[r].dihedral_index = dec.state_to_orbit[dec.rotation_orbits[r].members.front()];

    return dec;
}

// Transfer matrix compressed to dihedral orbits: entry (i, j) counts the
// states of orbit j compatible with the representative of orbit i. Row sums
// reproduce the row sums of the full matrix at the representatives.
struct OrbitMatrix {
    IntMatrix counts{0, 0};
    std::vector<int> weights;
    std::vector<BigInt> sizes;
};

inline OrbitMatrix orbit_transfer(const StateSet& states, const OrbitDecomposition& dec, const ClosedKernel& kernel) {
    if (states.spec.n != kernel.n) throw ConfigError("orbit_transfer: kernel and states disagree on n");
    int m = static_cast<int>(dec.orbits.size());
    OrbitMatrix out;
    out.counts = IntMatrix(m, m);
    out.weights.resize(m);
    out.sizes.resize(m);
    for (int i = 0; i < m; ++i) {
        out.weights[i] = dec.orbits[i].weight;
        out.sizes[i] = dec.orbits[i].size;
        for (int j = 0; j < m; ++j) {
            BigInt acc = 0;
            for (int idx : dec.orbits[j].members)
                if (compatible(dec.orbits[i].representative, states.states[idx], kernel)) acc += 1;
            out.counts.at(i, j) = acc;
        }
    }
    return out;
}

// Same compression over rotation orbits. This is the mode-0 block of the
// cyclic decomposition; it differs from the dihedral compression exactly
// when some dihedral orbit splits into a reflection pair.
inline OrbitMatrix rotation_orbit_transfer(const StateSet& states, const OrbitDecomposition& dec,
                                           const ClosedKernel& kernel) {
    if (states.spec.n != kernel.n) throw ConfigError("rotation_orbit_transfer: kernel and states disagree on n");
    int m = static_cast<int>(dec.rotation_orbits.size());
    OrbitMatrix out;
    out.counts = IntMatrix(m, m);
    out.weights.resize(m);
    out.sizes.resize(m);
    for (int i = 0; i < m; ++i) {
        out.weights[i] = dec.rotation_orbits[i].weight;
        out.sizes[i] = dec.rotation_orbits[i].size;
        for (int j = 0; j < m; ++j) {
            BigInt acc = 0;
            for (int idx : dec.rotation_orbits[j].members)
                if (compatible(dec.rotation_orbits[i].representative, states.states[idx], kernel)) acc += 1;
            out.counts.at(i, j) = acc;
        }
    }
    return out;
}

// Column j carries x^{w_j}, matching a column-weighted transfer operator.
inline PolyMatrix weighted_orbit_matrix(const OrbitMatrix& om) {
    int m = om.counts.rows();
    PolyMatrix out(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            out.at(i, j) = IntPoly::monomial(om.weights[j], om.counts.at(i, j));
    return out;
}

// Fourier block at mode k. Rows and columns run over rotation orbits: all of
// them at k = 0 (the empty state contributes a one-dimensional fixed block),
// free orbits only at k != 0. Requires prime n so that every nonempty orbit
// is free.
struct FourierBlock {
    int k = 0;
    CycMatrix m{0, 0};
    std::vector<int> orbit_ids;
    std::vector<int> weights;
};

inline FourierBlock fourier_block(const OrbitDecomposition& dec, const ClosedKernel& kernel, int k) {
    int n = kernel.n;
    if (!is_prime_u64(static_cast<uint64_t>(n)))
        throw ConfigError("fourier_block: needs prime n, got " + std::to_string(n));
    if (k < 0 || k >= n) throw ConfigError("fourier_block: mode out of range");
    for (const auto& ro : dec.rotation_orbits)
        if (ro.size != 1 && ro.size != n)
            throw StructuralError("fourier_block: non-free rotation orbit", std::to_string(ro.size), std::to_string(n));

    FourierBlock out;
    out.k = k;
    for (size_t r = 0; r < dec.rotation_orbits.size(); ++r) {
        if (k != 0 && dec.rotation_orbits[r].size != n) continue;
        out.orbit_ids.push_back(static_cast<int>(r));
        out.weights.push_back(dec.rotation_orbits[r].weight);
    }
    int m = static_cast<int>(out.orbit_ids.size());
    out.m = CycMatrix(m, m);
    for (int i = 0; i < m; ++i) {
        uint64_t rep_i = dec.rotation_orbits[out.orbit_ids[i]].representative;
        for (int j = 0; j < m; ++j) {
            const RotationOrbit& oj = dec.rotation_orbits[out.orbit_ids[j]];
            CyclotomicElement acc = CyclotomicElement::zero(n);
            if (oj.size == 1) {
                // Single fixed state; it only meets the k = 0 block.
                if (compatible(rep_i, oj.representative, kernel)) acc = acc + CyclotomicElement::rational(n, BigRational(1));
            } else {
                for (int t = 0; t < n; ++t)
                    if (compatible(rep_i, rotate_state(oj.representative, t, n), kernel))
                        acc = acc + CyclotomicElement::root_power(n, static_cast<long>(t) * k);
            }
            out.m.at(i, j) = acc;
        }
    }
    return out;
}

using CycPolyMatrix = Matrix<CycPoly>;

inline CycPolyMatrix weighted_fourier_block(const FourierBlock& block, int n) {
    int m = block.m.rows();
    CycPolyMatrix out(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            std::vector<CyclotomicElement> c(static_cast<size_t>(block.weights[j]) + 1, CyclotomicElement::zero(n));
            c.back() = block.m.at(i, j);
            out.at(i, j) = CycPoly(std::move(c));
        }
    return out;
}

// Multiplicities of the D_n irreducibles in the permutation module on
// states, for odd prime n: trivial, sign, and the (n-1)/2 two-dimensional
// representations. Character sums are evaluated exactly and cross-checked
// against the orbit combinatorics.
struct MultiplicityReport {
    int n = 0;
    std::vector<BigInt> fix_rotation;
    std::vector<BigInt> fix_reflection;
    BigInt trivial;
    BigInt sign;
    std::vector<BigInt> two_dim;
};

inline MultiplicityReport multiplicity_accounting(const StateSet& states, const OrbitDecomposition& dec) {
    int n = states.spec.n;
    if (!is_prime_u64(static_cast<uint64_t>(n)) || n == 2)
        throw ConfigError("multiplicity_accounting: needs odd prime n");

    MultiplicityReport rep;
    rep.n = n;
    rep.fix_rotation.assign(n, 0);
    rep.fix_reflection.assign(n, 0);
    for (uint64_t s : states.states) {
        for (int r = 0; r < n; ++r) {
            if (rotate_state(s, r, n) == s) rep.fix_rotation[r] += 1;
            if (rotate_state(reflect_state(s, n), r, n) == s) rep.fix_reflection[r] += 1;
        }
    }

    BigInt rot_total = 0, refl_total = 0;
    for (int r = 0; r < n; ++r) {
        rot_total += rep.fix_rotation[r];
        refl_total += rep.fix_reflection[r];
    }
    auto exact_div = [](const BigInt& a, int den) {
        BigRational q = make_rational(a, den);
        if (!is_integer(q)) throw StructuralError("multiplicity_accounting: non-integral multiplicity", to_string(q), "integer");
        return numerator(q);
    };
    rep.trivial = exact_div(rot_total + refl_total, 2 * n);
    rep.sign = exact_div(rot_total - refl_total, 2 * n);

    for (int k = 1; k <= (n - 1) / 2; ++k) {
        CyclotomicElement acc = CyclotomicElement::zero(n);
        for (int j = 0; j < n; ++j) {
            CyclotomicElement chi = CyclotomicElement::root_power(n, static_cast<long>(k) * j) +
                                    CyclotomicElement::root_power(n, -static_cast<long>(k) * j);
            acc = acc + chi * BigRational(rep.fix_rotation[j]);
        }
        auto q = acc.as_rational();
        if (!q) throw StructuralError("multiplicity_accounting: irrational character sum", acc.to_string(), "rational");
        BigRational val = *q / BigRational(2 * n);
        if (!is_integer(val)) throw StructuralError("multiplicity_accounting: non-integral multiplicity", to_string(val), "integer");
        rep.two_dim.push_back(numerator(val));
    }

    // Combinatorial cross-checks: trivial counts dihedral orbits, sign the
    // reflection-paired couples, and every 2-dim multiplicity equals the
    // number of free rotation orbits.
    BigInt orbit_count = static_cast<long>(dec.orbits.size());
    if (rep.trivial != orbit_count)
        throw StructuralError("multiplicity_accounting: trivial multiplicity", to_string(rep.trivial), to_string(orbit_count));
    long pairs = 0;
    for (const auto& o : dec.orbits)
        if (!o.reflection_closed) ++pairs;
    if (rep.sign != BigInt(pairs))
        throw StructuralError("multiplicity_accounting: sign multiplicity", to_string(rep.sign), std::to_string(pairs));
    BigInt free_orbits = static_cast<long>(dec.free_rotation_orbits().size());
    for (const BigInt& m : rep.two_dim)
        if (m != free_orbits)
            throw StructuralError("multiplicity_accounting: 2-dim multiplicity", to_string(m), to_string(free_orbits));

    BigInt total = rep.trivial + rep.sign;
    for (const BigInt& m : rep.two_dim) total += 2 * m;
    if (total != BigInt(states.count()))
        throw StructuralError("multiplicity_accounting: dimension identity", to_string(total), std::to_string(states.count()));

    return rep;
}

// Weighted traces of the symmetry sectors for a depth-d torus: the
// anomalous part tr((B_0 W)^d) and the paired cyclic part
// 2 * sum_{k=1}^{(n-1)/2} tr((B_k W)^d). Their sum is the torus
// independence polynomial; the cyclic sum is rational because the modes form
// one Galois orbit.
struct SectorTraces {
    IntPoly anomalous;
    IntPoly cyclotomic;
};

inline SectorTraces sector_traces(const OrbitDecomposition& dec, const ClosedKernel& kernel, int d) {
    if (d < 1) throw ConfigError("sector_traces: d must be >= 1");
    int n = kernel.n;

    FourierBlock b0 = fourier_block(dec, kernel, 0);
    int m = b0.m.rows();
    PolyMatrix w0(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            auto q = b0.m.at(i, j).as_rational();
            if (!q || !is_integer(*q))
                throw StructuralError("sector_traces: mode-0 block not integral", b0.m.at(i, j).to_string(), "integer");
            w0.at(i, j) = IntPoly::monomial(b0.weights[j], numerator(*q));
        }
    SectorTraces out;
    out.anomalous = trace_of_power(w0, d);

    CycPoly cyc_sum;
    for (int k = 1; k <= (n - 1) / 2; ++k) {
        FourierBlock bk = fourier_block(dec, kernel, k);
        cyc_sum = cyc_sum + trace_of_power(weighted_fourier_block(bk, n), d);
    }
    auto doubled = cyc_sum + cyc_sum;
    auto integral = cyc_poly_to_integral(doubled);
    if (!integral)
        throw StructuralError("sector_traces: cyclic sector trace not integral", "sum over modes", "integer polynomial");
    out.cyclotomic = *integral;
    return out;
}

} // namespace circulant
