#pragma once

// Pinned reference values used by the verification layer. These are quoted
// constants, not recomputed here, so that independent code paths can be
// checked against them.

#include <vector>

#include "circulant/bigint.hpp"
#include "circulant/graph.hpp"
#include "circulant/polynomial.hpp"

namespace circulant {

// Number of independent sets in C_7 boxtimes C_7 boxtimes C_7.
inline BigInt c7_cube_independent_sets() {
    return BigInt("2544256835855451311632423");
}

// Factors known to divide the anomalous charpoly factor for particular
// graphs. The sieve uses these as division candidates before falling back
// to modular analysis.
inline std::vector<IntPoly> known_factor_candidates(const CirculantSpec& spec) {
    std::vector<IntPoly> out;
    if (spec.n == 13 && spec.connection == CirculantSpec::cycle(13).connection) {
        out.push_back(IntPoly(std::vector<BigInt>{-1, -1, 2, 1}));
    }
    return out;
}

} // namespace circulant
