#pragma once

// Independent oracles for cross-checking the transfer machinery: a direct
// branching count of independent sets on an explicit graph, and a depth-first
// enumeration of compatible layer sequences. Both are deliberately naive.

#include <cstdlib>
#include <string>
#include <vector>

#include "circulant/bigint.hpp"
#include "circulant/errors.hpp"
#include "circulant/graph.hpp"
#include "circulant/polynomial.hpp"

namespace circulant {

// Vertex-count cap for the branching oracle; CIRCULANT_ORACLE_CAP overrides
// (the 64-vertex bitset ceiling still applies).
inline int default_oracle_cap() {
    if (const char* env = std::getenv("CIRCULANT_ORACLE_CAP")) {
        int v = std::atoi(env);
        if (v >= 1 && v <= 64) return v;
    }
    return 50;
}

struct OracleCount {
    IntPoly poly;
    int vertices = 0;
    size_t leaves = 0; // number of independent sets visited
};

namespace detail {

inline void oracle_branch(const std::vector<uint64_t>& adj, uint64_t remaining, int chosen,
                          std::vector<BigInt>& counts, size_t& leaves) {
    if (remaining == 0) {
        counts[static_cast<size_t>(chosen)] += 1;
        ++leaves;
        return;
    }
    int v = __builtin_ctzll(remaining);
    uint64_t bit = uint64_t(1) << v;
    oracle_branch(adj, remaining & ~bit, chosen, counts, leaves);
    oracle_branch(adj, remaining & ~(adj[v] | bit), chosen + 1, counts, leaves);
}

} // namespace detail

// I(G; x) by the branch recursion I(G) = I(G - v) + x I(G - N[v]). Every
// leaf is one independent set, so the work is linear in the answer.
inline OracleCount brute_independence_polynomial(const ExplicitGraph& g, int cap = default_oracle_cap()) {
    if (g.vertices > cap)
        throw CapExceeded("brute_independence_polynomial: " + std::to_string(g.vertices) +
                          " vertices exceed the oracle cap of " + std::to_string(cap));
    OracleCount out;
    out.vertices = g.vertices;
    std::vector<BigInt> counts(static_cast<size_t>(g.vertices) + 1, 0);
    uint64_t all = g.vertices == 64 ? ~uint64_t(0) : (uint64_t(1) << g.vertices) - 1;
    detail::oracle_branch(g.adj, all, 0, counts, out.leaves);
    out.poly = IntPoly(std::move(counts));
    return out;
}

struct LayeredCheck {
    IntPoly layered;  // from the sequence enumeration
    IntPoly brute;    // from the explicit stacked graph
    bool match = false;
};

namespace detail {

inline void layered_walk(const std::vector<std::vector<int>>& next, const std::vector<int>& weights,
                         int first, int cur, int depth, int d, Boundary boundary, int weight,
                         std::vector<BigInt>& counts) {
    if (depth == d) {
        if (boundary == Boundary::torus) {
            bool closes = false;
            for (int t : next[cur])
                if (t == first) { closes = true; break; }
            if (!closes) return;
        }
        counts[static_cast<size_t>(weight)] += 1;
        return;
    }
    for (int nxt : next[cur])
        layered_walk(next, weights, first, nxt, depth + 1, d, boundary, weight + weights[nxt], counts);
}

} // namespace detail

// Enumerates compatible layer sequences outright and compares against the
// branching oracle on the assembled stack. Agreement ties the layered model
// to the plain graph definition with no transfer algebra in between.
inline LayeredCheck layered_equivalence_check(const CirculantSpec& spec, int d, Boundary boundary,
                                              int cap = default_oracle_cap()) {
    if (d < 1 || (boundary == Boundary::torus && d < 2))
        throw ConfigError("layered_equivalence_check: invalid depth");
    // the stack build goes first so cap violations surface before any
    // enumeration work is spent
    LayeredCheck out;
    out.brute = brute_independence_polynomial(build_strong_stack(spec, d, boundary), cap).poly;

    StateSet states = enumerate_states(spec);
    ClosedKernel kernel = ClosedKernel::from(spec);
    int m = states.count();
    std::vector<std::vector<int>> next(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (compatible(states.states[i], states.states[j], kernel)) next[i].push_back(j);

    std::vector<BigInt> counts(static_cast<size_t>(spec.n) * d + 1, 0);
    for (int s = 0; s < m; ++s)
        detail::layered_walk(next, states.weights, s, s, 1, d, boundary, states.weights[s], counts);

    out.layered = IntPoly(std::move(counts));
    out.match = out.layered == out.brute;
    return out;
}

} // namespace circulant
