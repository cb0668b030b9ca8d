#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "circulant/graph.hpp"
#include "circulant/polynomial.hpp"

using namespace circulant;

namespace {

// Independence check straight from the definition, used to validate the DFS
// enumeration against a full 2^n scan.
bool independent_brute(uint64_t mask, const CirculantSpec& spec) {
    for (int u = 0; u < spec.n; ++u) {
        if (!((mask >> u) & 1)) continue;
        for (int c : spec.connection_list()) {
            int v = (u + c) % spec.n;
            if ((mask >> v) & 1) return false;
        }
    }
    return true;
}

uint64_t bits(std::initializer_list<int> vs) {
    uint64_t m = 0;
    for (int v : vs) m |= uint64_t(1) << v;
    return m;
}

} // namespace

TEST_CASE("state rotation and reflection") {
    REQUIRE(rotate_state(bits({0}), 1, 7) == bits({1}));
    REQUIRE(rotate_state(bits({6}), 1, 7) == bits({0}));
    REQUIRE(rotate_state(bits({0, 3}), -1, 7) == bits({6, 2}));
    REQUIRE(rotate_state(full_mask(7), 3, 7) == full_mask(7));
    REQUIRE(reflect_state(bits({0}), 7) == bits({0}));
    REQUIRE(reflect_state(bits({1, 2}), 7) == bits({5, 6}));
    for (uint64_t s : {bits({0, 2, 4}), bits({1, 5}), uint64_t(0), full_mask(7)}) {
        REQUIRE(reflect_state(reflect_state(s, 7), 7) == s);
        REQUIRE(rotate_state(rotate_state(s, 3, 7), 4, 7) == s);
    }
}

TEST_CASE("spec validation") {
    REQUIRE_THROWS_AS(CirculantSpec::make(2, {1}), ConfigError);
    REQUIRE_THROWS_AS(CirculantSpec::make(64, {1}), ConfigError);
    REQUIRE_THROWS_AS(CirculantSpec::make(7, {0}), ConfigError);
    REQUIRE_THROWS_AS(CirculantSpec::make(7, {7}), ConfigError);
    REQUIRE_THROWS_AS(CirculantSpec::make(7, {}), ConfigError);
    REQUIRE_THROWS_AS(CirculantSpec::make(7, {2}), ConfigError);  // not symmetric
    REQUIRE(CirculantSpec::make(7, {2}, true) == CirculantSpec::make(7, {2, 5}));
    REQUIRE(CirculantSpec::cycle(7).connection_list() == std::vector<int>({1, 6}));
    REQUIRE(CirculantSpec::cycle(5) == CirculantSpec::make(5, {1, 4}));
}

TEST_CASE("closed kernel") {
    ClosedKernel k = ClosedKernel::from(CirculantSpec::cycle(7));
    REQUIRE(k.member_list() == std::vector<int>({0, 1, 6}));
    REQUIRE(k.size() == 3);
    ClosedKernel k2 = ClosedKernel::from(CirculantSpec::make(9, {1, 3}, true));
    REQUIRE(k2.member_list() == std::vector<int>({0, 1, 3, 6, 8}));
}

TEST_CASE("minkowski difference") {
    REQUIRE(minkowski_difference(bits({0}), bits({0}), 7) == bits({0}));
    REQUIRE(minkowski_difference(bits({0, 2}), bits({1}), 7) == bits({6, 1}));
    REQUIRE(minkowski_difference(0, bits({1, 2}), 7) == 0);
    // brute cross-check on arbitrary masks
    uint64_t x = 1234567;
    auto next = [&x]() { x = x * 6364136223846793005ULL + 1442695040888963407ULL; return x >> 20; };
    for (int n : {5, 7, 9}) {
        for (int trial = 0; trial < 60; ++trial) {
            uint64_t a = next() & full_mask(n), b = next() & full_mask(n);
            uint64_t expect = 0;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (((a >> i) & 1) && ((b >> j) & 1)) expect |= uint64_t(1) << (((i - j) % n + n) % n);
            REQUIRE(minkowski_difference(a, b, n) == expect);
        }
    }
}

TEST_CASE("compatibility matches the difference-set definition") {
    uint64_t x = 987654321;
    auto next = [&x]() { x = x * 6364136223846793005ULL + 1442695040888963407ULL; return x >> 20; };
    for (int n : {5, 7, 9}) {
        ClosedKernel kernel = ClosedKernel::from(CirculantSpec::cycle(n));
        for (int trial = 0; trial < 200; ++trial) {
            uint64_t a = next() & full_mask(n), b = next() & full_mask(n);
            bool via_def = (minkowski_difference(a, b, n) & kernel.members) == 0;
            REQUIRE(compatible(a, b, kernel) == via_def);
            REQUIRE(compatible(a, b, kernel) == compatible(b, a, kernel));  // kernel is symmetric
        }
    }
}

TEST_CASE("state enumeration of odd cycles matches Lucas numbers") {
    // L_n counts independent sets of the n-cycle: 11, 29, 76, 199, 521.
    std::vector<std::pair<int, int>> expect{{5, 11}, {7, 29}, {9, 76}, {11, 199}, {13, 521}};
    for (auto [n, count] : expect) {
        StateSet s = enumerate_states(CirculantSpec::cycle(n));
        REQUIRE(s.count() == count);
    }
}

TEST_CASE("state enumeration agrees with the full subset scan") {
    for (int n : {5, 7, 9}) {
        CirculantSpec spec = CirculantSpec::cycle(n);
        StateSet s = enumerate_states(spec);
        std::set<uint64_t> brute;
        for (uint64_t mask = 0; mask <= full_mask(n); ++mask)
            if (independent_brute(mask, spec)) brute.insert(mask);
        REQUIRE(brute.size() == static_cast<size_t>(s.count()));
        for (uint64_t st : s.states) REQUIRE(brute.count(st) == 1);
    }
    // denser connection set
    CirculantSpec spec = CirculantSpec::make(9, {1, 3}, true);
    StateSet s = enumerate_states(spec);
    size_t brute = 0;
    for (uint64_t mask = 0; mask <= full_mask(9); ++mask)
        if (independent_brute(mask, spec)) ++brute;
    REQUIRE(brute == static_cast<size_t>(s.count()));
}

TEST_CASE("state ordering and index") {
    StateSet s = enumerate_states(CirculantSpec::cycle(7));
    REQUIRE(s.states.front() == 0);
    REQUIRE(s.weights.front() == 0);
    for (int i = 1; i < s.count(); ++i) {
        bool ordered = s.weights[i - 1] < s.weights[i] ||
                       (s.weights[i - 1] == s.weights[i] && s.states[i - 1] < s.states[i]);
        REQUIRE(ordered);
    }
    for (int i = 0; i < s.count(); ++i) REQUIRE(s.index_of(s.states[i]) == i);
    REQUIRE_THROWS_AS(s.index_of(bits({0, 1})), ConfigError);

    // weight histogram 1, 7, 14, 7
    std::vector<int> hist(4, 0);
    for (int w : s.weights) ++hist[w];
    REQUIRE(hist == std::vector<int>({1, 7, 14, 7}));
}

TEST_CASE("relabeled cycle has the same state count") {
    // Cay(Z_7, {2,5}) is C_7 relabeled by multiplication with 4.
    StateSet a = enumerate_states(CirculantSpec::cycle(7));
    StateSet b = enumerate_states(CirculantSpec::make(7, {2, 5}));
    REQUIRE(a.count() == b.count());
    std::vector<int> ha(4, 0), hb(4, 0);
    for (int w : a.weights) ++ha[w];
    for (int w : b.weights) ++hb[w];
    REQUIRE(ha == hb);
}

TEST_CASE("strong stack structure") {
    CirculantSpec spec = CirculantSpec::cycle(7);

    ExplicitGraph layer = build_strong_stack(spec, 1, Boundary::strip);
    REQUIRE(layer.vertices == 7);
    REQUIRE(layer.edge_count() == 7);
    for (int v = 0; v < 7; ++v) REQUIRE(layer.degree(v) == 2);

    ExplicitGraph strip2 = build_strong_stack(spec, 2, Boundary::strip);
    REQUIRE(strip2.vertices == 14);
    for (int v = 0; v < 14; ++v) REQUIRE(strip2.degree(v) == 5);
    REQUIRE(strip2.edge_count() == 35);

    ExplicitGraph torus2 = build_strong_stack(spec, 2, Boundary::torus);
    REQUIRE(torus2.adj == strip2.adj);  // the d = 2 wrap adds nothing new

    ExplicitGraph strip3 = build_strong_stack(spec, 3, Boundary::strip);
    for (int v = 0; v < 7; ++v) {
        REQUIRE(strip3.degree(v) == 5);
        REQUIRE(strip3.degree(7 + v) == 8);
        REQUIRE(strip3.degree(14 + v) == 5);
    }

    ExplicitGraph torus3 = build_strong_stack(spec, 3, Boundary::torus);
    for (int v = 0; v < 21; ++v) REQUIRE(torus3.degree(v) == 8);
    REQUIRE(torus3.edge_count() == 84);

    // C_7 x C_7 under the strong product is 8-regular
    ExplicitGraph big = build_strong_stack(spec, 7, Boundary::torus);
    REQUIRE(big.vertices == 49);
    for (int v = 0; v < 49; ++v) REQUIRE(big.degree(v) == 8);
    REQUIRE(big.edge_count() == 196);
}

TEST_CASE("strong stack limits") {
    REQUIRE_THROWS_AS(build_strong_stack(CirculantSpec::cycle(13), 5, Boundary::strip), CapExceeded);
    REQUIRE_THROWS_AS(build_strong_stack(CirculantSpec::cycle(7), 0, Boundary::strip), ConfigError);
    REQUIRE_THROWS_AS(build_strong_stack(CirculantSpec::cycle(7), 1, Boundary::torus), ConfigError);
    REQUIRE_THROWS_AS(ExplicitGraph(65), CapExceeded);
    ExplicitGraph g(2);
    REQUIRE_THROWS_AS(g.add_edge(1, 1), ConfigError);
}

TEST_CASE("kernel spectrum of odd prime cycles") {
    for (int n : {5, 7, 11, 13}) {
        CirculantSpec spec = CirculantSpec::cycle(n);
        KernelSpectrum ks = fourier_of_kernel(spec);
        REQUIRE(ks.exact);
        REQUIRE(ks.values.size() == static_cast<size_t>(n));

        auto dc = ks.values[0].as_rational();
        REQUIRE(dc);
        REQUIRE(*dc == BigRational(n - 3));

        CyclotomicElement sum = CyclotomicElement::zero(n);
        for (const auto& v : ks.values) sum = sum + v;
        REQUIRE(sum.is_zero());  // 0 sits in the kernel, so the column sums vanish

        for (int k = 1; k < n; ++k) {
            REQUIRE((ks.values[k] + mu_value(n, k)).is_zero());
            std::complex<double> diff = ks.values[k].to_complex() - ks.numeric[k];
            REQUIRE(std::abs(diff) < 1e-9);
        }
    }
}

TEST_CASE("kernel spectrum of a composite order is numeric only") {
    KernelSpectrum ks = fourier_of_kernel(CirculantSpec::cycle(9));
    REQUIRE_FALSE(ks.exact);
    REQUIRE(ks.values.empty());
    REQUIRE(ks.numeric.size() == 9);
    REQUIRE(ks.numeric[0].real() == Catch::Approx(6.0).margin(1e-12));
    REQUIRE(ks.numeric[0].imag() == Catch::Approx(0.0).margin(1e-12));
    REQUIRE(ks.numeric[3].real() == Catch::Approx(-(1.0 + 2.0 * std::cos(2.0 * 3.14159265358979323846 * 3 / 9))).margin(1e-9));
}

