#include <catch2/catch_amalgamated.hpp>

#include <cstdint>

#include "circulant/charpoly.hpp"
#include "circulant/matrix.hpp"

using namespace circulant;

namespace {

IntPoly ip(std::vector<long> asc) {
    std::vector<BigInt> c(asc.begin(), asc.end());
    return IntPoly(std::move(c));
}

// Deterministic pseudo-random stream so failures reproduce exactly.
struct Lcg {
    uint64_t s;
    explicit Lcg(uint64_t seed) : s(seed) {}
    uint64_t next() {
        s = s * 6364136223846793005ull + 1442695040888963407ull;
        return s >> 33;
    }
    long range(long lo, long hi) { return lo + long(next() % uint64_t(hi - lo + 1)); }
};

IntMatrix random_matrix(size_t d, Lcg& rng, long lo, long hi) {
    IntMatrix m(d, d);
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) m.at(i, j) = BigInt(rng.range(lo, hi));
    return m;
}

// det(xI - A) at a scalar point, via the Bareiss determinant. Completely
// independent of both charpoly implementations.
BigInt charpoly_value_by_determinant(const IntMatrix& a, long x) {
    IntMatrix m(a.rows(), a.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j)
            m.at(i, j) = (i == j ? BigInt(BigInt(x) - a.at(i, j)) : BigInt(-a.at(i, j)));
    return bareiss_determinant(m);
}

} // namespace

TEST_CASE("tiny matrices by hand") {
    IntMatrix one(1, 1);
    one.at(0, 0) = 2;
    REQUIRE(charpoly_exact(one) == ip({-2, 1}));

    IntMatrix swap2(2, 2);
    swap2.at(0, 1) = 1;
    swap2.at(1, 0) = 1;
    REQUIRE(charpoly_exact(swap2) == ip({-1, 0, 1}));

    // Companion matrix of x^3 - 3x^2 - 8x + 10.
    IntMatrix comp(3, 3);
    comp.at(0, 2) = -10;
    comp.at(1, 0) = 1;
    comp.at(1, 2) = 8;
    comp.at(2, 1) = 1;
    comp.at(2, 2) = 3;
    REQUIRE(charpoly_exact(comp) == ip({10, -8, -3, 1}));
}

TEST_CASE("orbit-counting matrix of the 5-cycle") {
    // Rows/columns: empty set, singletons, gap-2 pairs. Entries counted by
    // hand from the compatibility condition.
    IntMatrix t(3, 3);
    long rows[3][3] = {{1, 5, 5}, {1, 2, 0}, {1, 0, 0}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) t.at(i, j) = rows[i][j];
    REQUIRE(charpoly_exact(t) == ip({10, -8, -3, 1}));
    REQUIRE(charpoly_faddeev(t) == ip({10, -8, -3, 1}));
}

TEST_CASE("CRT path agrees with Faddeev-LeVerrier on random matrices") {
    Lcg rng(20260819);
    for (int trial = 0; trial < 120; ++trial) {
        size_t d = 1 + trial % 10;
        IntMatrix a = random_matrix(d, rng, -5, 5);
        IntPoly crt = charpoly_exact(a);
        IntPoly fl = charpoly_faddeev(a);
        REQUIRE(crt == fl);
        REQUIRE(crt.degree() == int(d));
        REQUIRE(crt.lead() == 1);
    }
}

TEST_CASE("values cross-checked against Bareiss determinants") {
    Lcg rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        size_t d = 2 + trial % 8;
        IntMatrix a = random_matrix(d, rng, -9, 9);
        IntPoly cp = charpoly_exact(a);
        for (long x : {0L, 1L, -2L, 13L}) {
            REQUIRE(cp.evaluate(BigInt(x)) == charpoly_value_by_determinant(a, x));
        }
        // c_{d-1} = -trace
        REQUIRE(cp.coeff(d - 1) == -a.trace());
    }
}

TEST_CASE("moderate 0/1 matrix, coefficients certified at spot points") {
    Lcg rng(42);
    size_t d = 40;
    IntMatrix a(d, d);
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) a.at(i, j) = BigInt(long(rng.next() & 1));
    IntPoly cp = charpoly_exact(a);
    REQUIRE(cp.degree() == 40);
    REQUIRE(cp.evaluate(BigInt(0)) == charpoly_value_by_determinant(a, 0));
    REQUIRE(cp.evaluate(BigInt(1)) == charpoly_value_by_determinant(a, 1));
    REQUIRE(cp.evaluate(BigInt(-1)) == charpoly_value_by_determinant(a, -1));
}

TEST_CASE("bareiss determinant basics") {
    IntMatrix m(3, 3);
    long rows[3][3] = {{2, 0, 1}, {1, 1, 0}, {0, 3, 4}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m.at(i, j) = rows[i][j];
    REQUIRE(bareiss_determinant(m) == 11);

    IntMatrix sing(2, 2);
    sing.at(0, 0) = 1; sing.at(0, 1) = 2;
    sing.at(1, 0) = 2; sing.at(1, 1) = 4;
    REQUIRE(bareiss_determinant(sing) == 0);

    // Pivot search path: leading zero forces a row swap.
    IntMatrix piv(2, 2);
    piv.at(0, 0) = 0; piv.at(0, 1) = 3;
    piv.at(1, 0) = 5; piv.at(1, 1) = 7;
    REQUIRE(bareiss_determinant(piv) == -15);
}
