#pragma once

// The transfer operator over layer states and the independence polynomials
// it generates for strips and tori, plus a floating-point spectral summary.

#include <complex>
#include <vector>

#include "circulant/bigint.hpp"
#include "circulant/charpoly.hpp"
#include "circulant/errors.hpp"
#include "circulant/graph.hpp"
#include "circulant/matrix.hpp"
#include "circulant/numeric.hpp"
#include "circulant/polynomial.hpp"
#include "circulant/symmetry.hpp"

namespace circulant {

// 0/1 matrix over all layer states: entry (i, j) is 1 iff states i and j may
// sit on adjacent layers. Symmetric because the kernel is.
struct TransferMatrix {
    CirculantSpec spec;
    IntMatrix m{0, 0};
    std::vector<int> weights;
};

inline TransferMatrix build_transfer(const StateSet& states, const ClosedKernel& kernel) {
    if (states.spec.n != kernel.n) throw ConfigError("build_transfer: kernel and states disagree on n");
    int m = states.count();
    TransferMatrix out;
    out.spec = states.spec;
    out.m = IntMatrix(m, m);
    out.weights = states.weights;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            out.m.at(i, j) = compatible(states.states[i], states.states[j], kernel) ? 1 : 0;
    return out;
}

// Column-weighted operator M(x): entry (i, j) = T[i][j] * x^{w_j}.
struct WeightedTransfer {
    PolyMatrix m{0, 0};
    std::vector<int> weights;
};

inline WeightedTransfer weighted_transfer(const TransferMatrix& t) {
    int m = t.m.rows();
    WeightedTransfer out;
    out.weights = t.weights;
    out.m = PolyMatrix(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (t.m.at(i, j) != 0) out.m.at(i, j) = IntPoly::monomial(t.weights[j], 1);
    return out;
}

// Independence polynomial of the d-layer strip: sum over compatible layer
// sequences (S_1, ..., S_d) of x^{sum |S_i|}, evaluated as
// sum_I x^{w_I} (M(x)^{d-1} 1)_I.
inline IntPoly strip_polynomial(const WeightedTransfer& wt, int d) {
    if (d < 1) throw ConfigError("strip_polynomial: d must be >= 1");
    size_t m = wt.m.rows();
    std::vector<IntPoly> v(m, IntPoly::constant(1));
    for (int step = 1; step < d; ++step) v = wt.m.apply(v);
    IntPoly out;
    for (size_t i = 0; i < m; ++i) out += IntPoly::monomial(wt.weights[i], 1) * v[i];
    return out;
}

// Same sum grouped by dihedral orbit: the iteration vector only depends on
// the orbit of the leading state.
inline IntPoly strip_polynomial(const OrbitMatrix& om, int d) {
    if (d < 1) throw ConfigError("strip_polynomial: d must be >= 1");
    PolyMatrix weighted = weighted_orbit_matrix(om);
    size_t m = weighted.rows();
    std::vector<IntPoly> v(m, IntPoly::constant(1));
    for (int step = 1; step < d; ++step) v = weighted.apply(v);
    IntPoly out;
    for (size_t i = 0; i < m; ++i)
        out += IntPoly::monomial(om.weights[i], om.sizes[i]) * v[i];
    return out;
}

// Independence polynomial of the d-layer torus, tr(M(x)^d). A single wrapped
// layer would force every state to be compatible with itself, which only the
// empty state survives, so d starts at 2.
inline IntPoly torus_polynomial(const WeightedTransfer& wt, int d) {
    if (d < 2) throw ConfigError("torus_polynomial: d must be >= 2");
    return trace_of_power(wt.m, static_cast<unsigned long>(d));
}

struct IndependencePolynomial {
    CirculantSpec spec;
    int d = 0;
    Boundary boundary = Boundary::strip;
    IntPoly poly;

    BigInt total() const { return poly.evaluate(BigInt(1)); }
    int independence_number() const { return poly.degree(); }
};

inline IndependencePolynomial independence_polynomial(const CirculantSpec& spec, int d, Boundary boundary) {
    StateSet states = enumerate_states(spec);
    ClosedKernel kernel = ClosedKernel::from(spec);
    IndependencePolynomial out;
    out.spec = spec;
    out.d = d;
    out.boundary = boundary;
    if (boundary == Boundary::strip) {
        OrbitDecomposition dec = orbit_decompose(states);
        out.poly = strip_polynomial(orbit_transfer(states, dec, kernel), d);
    } else {
        out.poly = torus_polynomial(weighted_transfer(build_transfer(states, kernel)), d);
    }
    return out;
}

struct GrowthSample {
    int d = 0;
    BigInt count;
    double root = 0; // count^(1/d)
};

struct SpectralReport {
    double rho = 0;        // Perron eigenvalue of the full transfer matrix
    double rho_orbit = 0;  // same eigenvalue from the orbit-counting matrix
    bool power_converged = false;
    size_t power_iterations = 0;
    double perron_min = 0; // smallest entry of the scaled Perron vector
    double capacity = 0;   // rho^(1/n)
    std::vector<GrowthSample> growth;
    std::vector<double> ratios; // successive count quotients
    std::vector<std::complex<double>> orbit_roots; // nonzero spectrum of the orbit matrix
    bool roots_converged = false;
};

// Floating-point summary: Perron data from both the full and the compressed
// operator, exact strip counts with d-th roots and successive ratios (the
// ratios converge to rho far faster than the roots do), and the nonzero
// orbit spectrum. Counts come from the exact orbit iteration, so the horizon
// costs almost nothing.
inline SpectralReport spectral_report(const TransferMatrix& t, const OrbitMatrix& om,
                                      int horizon = 20, double tol = 1e-12, size_t max_iterations = 50000) {
    if (horizon < 2) throw ConfigError("spectral_report: horizon must be >= 2");
    SpectralReport rep;

    PowerIterationResult full = power_iteration(matrix_to_double(t.m), tol, max_iterations);
    PowerIterationResult orbit = power_iteration(matrix_to_double(om.counts), tol, max_iterations);
    rep.rho = full.value;
    rep.rho_orbit = orbit.value;
    rep.power_converged = full.converged && orbit.converged;
    rep.power_iterations = full.iterations + orbit.iterations;
    rep.perron_min = full.vec.empty() ? 0 : *std::min_element(full.vec.begin(), full.vec.end());
    rep.capacity = std::pow(rep.rho, 1.0 / t.spec.n);

    size_t m = om.counts.rows();
    std::vector<BigInt> v(m, 1);
    for (int d = 1; d <= horizon; ++d) {
        BigInt count = 0;
        for (size_t i = 0; i < m; ++i) count += om.sizes[i] * v[i];
        rep.growth.push_back({d, count, std::pow(count.get_d(), 1.0 / d)});
        if (d < horizon) v = om.counts.apply(v);
    }
    for (size_t i = 0; i + 1 < rep.growth.size(); ++i)
        rep.ratios.push_back(rep.growth[i + 1].count.get_d() / rep.growth[i].count.get_d());

    IntPoly chi = charpoly_exact(om.counts);
    IntPoly reduced(std::vector<BigInt>(chi.coeffs().begin() + chi.valuation(), chi.coeffs().end()));
    RootSet roots = durand_kerner(monic_double_coefficients(reduced));
    rep.orbit_roots = roots.roots;
    rep.roots_converged = roots.converged;
    return rep;
}

} // namespace circulant
