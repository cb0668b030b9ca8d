#include <catch2/catch_amalgamated.hpp>

#include "circulant/verification.hpp"

using namespace circulant;

namespace {

const CheckResult& find(const VerificationReport& rep, const std::string& name) {
    for (const auto& c : rep.checks)
        if (c.name == name) return c;
    FAIL("missing check: " + name);
    throw std::logic_error("unreachable");
}

} // namespace

TEST_CASE("verification passes for C_7 with everything on") {
    VerificationOptions opt;
    opt.with_factorization = true;
    VerificationReport rep = run_verification(CirculantSpec::cycle(7), opt);
    REQUIRE(rep.all_passed());
    REQUIRE(rep.count(CheckStatus::skipped) == 0);
    REQUIRE(rep.count(CheckStatus::failed) == 0);
    REQUIRE(find(rep, "state enumeration vs subset scan").detail == "29 states");
    REQUIRE(find(rep, "strip d=3 full vs orbit").detail == "I(1) = 1387");
    REQUIRE(find(rep, "torus d=2 vs sector traces").detail == "I(1) = 127");
    REQUIRE(find(rep, "characteristic polynomial factorization").detail ==
            "nu = 13, deg f_anom = 4, deg f_cyc = 6");
}

TEST_CASE("verification skips prime-only checks on composite n") {
    VerificationOptions opt;
    opt.depths = {2, 3};
    VerificationReport rep = run_verification(CirculantSpec::cycle(9), opt);
    REQUIRE(rep.all_passed());
    REQUIRE(find(rep, "torus d=2 vs sector traces").status == CheckStatus::skipped);
    REQUIRE(find(rep, "multiplicity accounting").status == CheckStatus::skipped);
    REQUIRE(find(rep, "block trace identity").status == CheckStatus::skipped);
    REQUIRE(find(rep, "kernel spectrum").status == CheckStatus::passed);
    REQUIRE(find(rep, "strip d=2 vs oracle").status == CheckStatus::passed);
}

TEST_CASE("verification respects the oracle cap") {
    VerificationOptions opt;
    opt.depths = {2, 9};
    opt.oracle_cap = 20;
    VerificationReport rep = run_verification(CirculantSpec::cycle(5), opt);
    REQUIRE(rep.all_passed());
    REQUIRE(find(rep, "strip d=2 vs oracle").status == CheckStatus::passed);
    const CheckResult& far = find(rep, "strip d=9 vs oracle");
    REQUIRE(far.status == CheckStatus::skipped);
    REQUIRE(far.detail.find("above oracle cap") != std::string::npos);
    // non-oracle checks still run at that depth
    REQUIRE(find(rep, "strip d=9 full vs orbit").status == CheckStatus::passed);
}

TEST_CASE("verification covers a non-cycle circulant") {
    VerificationOptions opt;
    opt.depths = {2};
    VerificationReport rep = run_verification(CirculantSpec::make(9, {1, 3, 6, 8}), opt);
    REQUIRE(rep.all_passed());
    REQUIRE(find(rep, "state enumeration vs subset scan").detail == "37 states");
}
