#pragma once

// Circulant graph specifications, independent-set state enumeration on one
// layer, explicit stacked (strong product) graphs at small scale, and the
// Fourier data of the closed adjacency kernel.
//
// States are subsets of Z_n stored as bitmasks, so n is capped at 63; the
// explicit stacked graphs are likewise capped at 64 vertices. These caps are
// structural (word-size bitsets), not tuning knobs.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "circulant/bigint.hpp"
#include "circulant/cyclotomic.hpp"
#include "circulant/errors.hpp"

namespace circulant {

inline uint64_t full_mask(int n) { return n == 64 ? ~uint64_t(0) : (uint64_t(1) << n) - 1; }

// Cyclic rotation of an n-bit state: vertex v maps to v + r mod n.
inline uint64_t rotate_state(uint64_t s, int r, int n) {
    r %= n;
    if (r < 0) r += n;
    if (r == 0) return s;
    return ((s << r) | (s >> (n - r))) & full_mask(n);
}

// Reflection v -> -v mod n.
inline uint64_t reflect_state(uint64_t s, int n) {
    uint64_t out = 0;
    for (int v = 0; v < n; ++v)
        if ((s >> v) & 1) out |= uint64_t(1) << ((n - v) % n);
    return out;
}

// Cay(Z_n, C): vertex set Z_n, edges u ~ u + c for c in C. C must be
// symmetric (closed under negation) and avoid 0.
struct CirculantSpec {
    int n = 0;
    uint64_t connection = 0; // bit c set <=> c in C

    // Builds and validates. With symmetrize set, residues are closed under
    // negation first (the CLI convenience); otherwise asymmetric input is
    // rejected outright.
    static CirculantSpec make(int n, const std::vector<int>& residues, bool symmetrize = false) {
        if (n < 3 || n > 63) throw ConfigError("CirculantSpec: n must be in [3, 63], got " + std::to_string(n));
        uint64_t c = 0;
        for (int r : residues) {
            if (r <= 0 || r >= n)
                throw ConfigError("CirculantSpec: connection residue " + std::to_string(r) + " out of range for n = " + std::to_string(n));
            c |= uint64_t(1) << r;
            if (symmetrize) c |= uint64_t(1) << (n - r);
        }
        if (c == 0) throw ConfigError("CirculantSpec: empty connection set");
        CirculantSpec spec{n, c};
        spec.validate();
        return spec;
    }

    static CirculantSpec cycle(int n) { return make(n, {1}, true); }

    void validate() const {
        if (n < 3 || n > 63) throw ConfigError("CirculantSpec: n out of range");
        if (connection & 1) throw ConfigError("CirculantSpec: 0 cannot be a connection residue");
        if (connection >> n) throw ConfigError("CirculantSpec: connection residue out of range");
        for (int r = 1; r < n; ++r) {
            bool fwd = (connection >> r) & 1;
            bool bwd = (connection >> (n - r)) & 1;
            if (fwd != bwd)
                throw ConfigError("CirculantSpec: connection set is not symmetric (residue " + std::to_string(r) + ")");
        }
    }

    std::vector<int> connection_list() const {
        std::vector<int> out;
        for (int r = 1; r < n; ++r)
            if ((connection >> r) & 1) out.push_back(r);
        return out;
    }

    bool operator==(const CirculantSpec& o) const { return n == o.n && connection == o.connection; }
};

// B = C ∪ {0}, the difference set that separates layers of the strong
// product. Symmetric and 0-closed by construction.
struct ClosedKernel {
    int n = 0;
    uint64_t members = 0;

    static ClosedKernel from(const CirculantSpec& spec) {
        spec.validate();
        return ClosedKernel{spec.n, spec.connection | 1};
    }

    std::vector<int> member_list() const {
        std::vector<int> out;
        for (int r = 0; r < n; ++r)
            if ((members >> r) & 1) out.push_back(r);
        return out;
    }

    int size() const { return static_cast<int>(member_list().size()); }
};

// {i - j mod n : i in I, j in J} as a bitmask.
inline uint64_t minkowski_difference(uint64_t i_set, uint64_t j_set, int n) {
    uint64_t out = 0;
    for (int j = 0; j < n; ++j)
        if ((j_set >> j) & 1) out |= rotate_state(i_set, -j, n);
    return out;
}

// Layers I and J may be adjacent stacked layers iff (I - J) avoids B.
inline bool compatible(uint64_t i_set, uint64_t j_set, const ClosedKernel& kernel) {
    for (int b = 0; b < kernel.n; ++b) {
        if (!((kernel.members >> b) & 1)) continue;
        if (i_set & rotate_state(j_set, b, kernel.n)) return false;
    }
    return true;
}

// All independent sets of one layer, sorted by (weight, bitmask).
struct StateSet {
    CirculantSpec spec;
    std::vector<uint64_t> states;
    std::vector<int> weights;
    std::unordered_map<uint64_t, int> index;

    int count() const { return static_cast<int>(states.size()); }

    int index_of(uint64_t s) const {
        auto it = index.find(s);
        if (it == index.end()) throw ConfigError("StateSet: unknown state");
        return it->second;
    }
};

inline StateSet enumerate_states(const CirculantSpec& spec) {
    spec.validate();
    int n = spec.n;
    std::vector<uint64_t> neighbor(n);
    for (int v = 0; v < n; ++v) neighbor[v] = rotate_state(spec.connection, v, n);

    std::vector<uint64_t> found;
    // Depth-first over vertices; forbidden accumulates closed neighborhoods
    // of chosen vertices, so every emitted subset is independent.
    struct Frame { int pos; uint64_t chosen; uint64_t forbidden; };
    std::vector<Frame> stack{{0, 0, 0}};
    while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        if (f.pos == n) {
            found.push_back(f.chosen);
            continue;
        }
        stack.push_back({f.pos + 1, f.chosen, f.forbidden});
        if (!((f.forbidden >> f.pos) & 1)) {
            stack.push_back({f.pos + 1, f.chosen | (uint64_t(1) << f.pos),
                             f.forbidden | neighbor[f.pos] | (uint64_t(1) << f.pos)});
        }
    }

    std::sort(found.begin(), found.end(), [](uint64_t a, uint64_t b) {
        int wa = __builtin_popcountll(a), wb = __builtin_popcountll(b);
        if (wa != wb) return wa < wb;
        return a < b;
    });

    StateSet out;
    out.spec = spec;
    out.states = std::move(found);
    out.weights.resize(out.states.size());
    for (size_t i = 0; i < out.states.size(); ++i) {
        out.weights[i] = __builtin_popcountll(out.states[i]);
        out.index.emplace(out.states[i], static_cast<int>(i));
    }
    return out;
}

enum class Boundary { strip, torus };

inline const char* boundary_name(Boundary b) { return b == Boundary::strip ? "strip" : "torus"; }

// Small explicit graph with neighbor bitsets; at most 64 vertices.
struct ExplicitGraph {
    int vertices = 0;
    std::vector<uint64_t> adj;

    explicit ExplicitGraph(int v = 0) : vertices(v), adj(v, 0) {
        if (v < 0 || v > 64) throw CapExceeded("ExplicitGraph: vertex count " + std::to_string(v) + " exceeds the 64-vertex bitset cap");
    }

    void add_edge(int u, int v) {
        if (u == v) throw ConfigError("ExplicitGraph: self loop");
        adj[u] |= uint64_t(1) << v;
        adj[v] |= uint64_t(1) << u;
    }

    int degree(int v) const { return __builtin_popcountll(adj[v]); }

    size_t edge_count() const {
        size_t twice = 0;
        for (int v = 0; v < vertices; ++v) twice += degree(v);
        return twice / 2;
    }
};

// The strong-product stack of d layers of Cay(Z_n, C): vertices (v, l),
// intra-layer circulant edges, and inter-layer edges (u, l) ~ (v, l + 1)
// whenever v - u lands in the closed kernel B. A torus wraps the last layer
// onto the first; d = 2 torus coincides with the two-layer strip because the
// wrap edge duplicates the existing adjacency, and d = 1 torus is rejected.
inline ExplicitGraph build_strong_stack(const CirculantSpec& spec, int d, Boundary boundary) {
    spec.validate();
    if (d < 1) throw ConfigError("build_strong_stack: d must be >= 1");
    if (boundary == Boundary::torus && d < 2) throw ConfigError("build_strong_stack: torus needs d >= 2");
    long total = static_cast<long>(spec.n) * d;
    if (total > 64) throw CapExceeded("build_strong_stack: " + std::to_string(total) + " vertices exceed the 64-vertex cap");
    ExplicitGraph g(static_cast<int>(total));
    int n = spec.n;
    ClosedKernel kernel = ClosedKernel::from(spec);
    auto id = [n](int layer, int v) { return layer * n + v; };
    for (int l = 0; l < d; ++l)
        for (int v = 0; v < n; ++v)
            for (int c : spec.connection_list())
                if (c < n - c || (n - c == c))
                    g.add_edge(id(l, v), id(l, (v + c) % n));
    auto connect_layers = [&](int la, int lb) {
        for (int u = 0; u < n; ++u)
            for (int b : kernel.member_list()) {
                int v = (u + b) % n;
                if (g.adj[id(la, u)] >> id(lb, v) & 1) continue;
                g.add_edge(id(la, u), id(lb, v));
            }
    };
    for (int l = 0; l + 1 < d; ++l) connect_layers(l, l + 1);
    if (boundary == Boundary::torus && d >= 2) connect_layers(d - 1, 0);
    return g;
}

// DFT of the indicator of the complement of B. Exact cyclotomic values are
// available when n is prime; the numeric embedding is always filled.
struct KernelSpectrum {
    int n = 0;
    bool exact = false;
    std::vector<CyclotomicElement> values;        // size n when exact
    std::vector<std::complex<double>> numeric;    // size n
};

inline KernelSpectrum fourier_of_kernel(const CirculantSpec& spec) {
    ClosedKernel kernel = ClosedKernel::from(spec);
    int n = spec.n;
    KernelSpectrum out;
    out.n = n;
    out.exact = is_prime_u64(static_cast<uint64_t>(n));
    out.numeric.resize(n);
    const double tau = 6.283185307179586476925286766559;
    for (int k = 0; k < n; ++k) {
        std::complex<double> acc = 0;
        for (int j = 0; j < n; ++j) {
            if ((kernel.members >> j) & 1) continue;
            acc += std::complex<double>(std::cos(tau * j * k / n), -std::sin(tau * j * k / n));
        }
        out.numeric[k] = acc;
    }
    if (out.exact) {
        out.values.reserve(n);
        for (int k = 0; k < n; ++k) {
            CyclotomicElement acc = CyclotomicElement::zero(n);
            for (int j = 0; j < n; ++j) {
                if ((kernel.members >> j) & 1) continue;
                acc = acc + CyclotomicElement::root_power(n, -static_cast<long>(j) * k);
            }
            out.values.push_back(acc);
        }
    }
    return out;
}

} // namespace circulant
