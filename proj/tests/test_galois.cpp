#include <doctest.h>

#include "cyclotomic.hpp"
#include "galois.hpp"

using namespace monocyc;

TEST_CASE("condition verdicts") {
    auto v9 = condition_c(9);
    CHECK(v9.satisfied);
    CHECK(v9.branch == CBranch::PrimePower);
    CHECK(v9.p == 3);
    CHECK(v9.a == 2);

    auto v15 = condition_c(15);
    CHECK(v15.satisfied);
    CHECK(v15.branch == CBranch::PrimePowerPair);
    CHECK(v15.p == 3);
    CHECK(v15.a == 1);
    CHECK(v15.q == 5);
    CHECK(v15.b == 1);
    CHECK(v15.gamma == 2);

    auto v63 = condition_c(63);
    CHECK(!v63.satisfied);
    CHECK(v63.gamma == 6);

    CHECK(!condition_c(105).satisfied);

    auto v11 = condition_c(11);
    CHECK(v11.satisfied);
    CHECK(v11.branch == CBranch::PrimePower);
    CHECK(v11.p == 11);
    CHECK(v11.a == 1);

    auto v22 = condition_c(22);
    CHECK(v22.satisfied);
    CHECK(v22.branch == CBranch::TwoPrimePower);

    CHECK(condition_c(30).satisfied);
    CHECK(condition_c(30).branch == CBranch::TwoPrimePowerPair);

    CHECK(!condition_c(2).satisfied);
    CHECK(!condition_c(4).satisfied);
    CHECK(!condition_c(16).satisfied);
    CHECK(!condition_c(12).satisfied);
    CHECK_THROWS_AS((void)condition_c(1), Error);
}

TEST_CASE("cyclicity wrapper honors its domain") {
    CHECK(real_cyclotomic_gal_cyclic(15));
    CHECK(!real_cyclotomic_gal_cyclic(63));
    CHECK(real_cyclotomic_gal_cyclic(22));
    CHECK_THROWS_AS((void)real_cyclotomic_gal_cyclic(16), Error);
    CHECK_THROWS_AS((void)real_cyclotomic_gal_cyclic(12), Error);
}

TEST_CASE("per-factor galois reports") {
    auto r9 = omega_galois_report(9);
    CHECK(r9.group_order == 3);
    CHECK(r9.cyclic);
    CHECK(r9.oracle_cyclic);

    auto r21 = omega_galois_report(21);
    CHECK(r21.group_order == 6);
    CHECK(r21.cyclic);

    auto r63 = omega_galois_report(63);
    CHECK(r63.group_order == 18);
    CHECK(!r63.cyclic);

    CHECK_THROWS_AS((void)omega_galois_report(8), Error);

    for (std::uint64_t d = 3; d <= 151; d += 2) {
        auto rep = omega_galois_report(d); // raises on any predicate/oracle split
        REQUIRE(rep.group_order == static_cast<std::uint64_t>(omega(d).poly.degree()));
    }
}

TEST_CASE("predicate equals the unit-group oracle on the asserted domain") {
    for (std::uint64_t N = 3; N <= 2000; ++N) {
        if (N % 4 == 0)
            continue;
        CAPTURE(N);
        REQUIRE(condition_c(N).satisfied == unit_group_mod_pm1(N).is_cyclic);
    }
}

TEST_CASE("divisor closure") {
    // Odd N passes closure for every divisor >= 2. For even N the divisor 2
    // itself is the one exception: the condition's even shapes start at 2p.
    for (std::uint64_t N = 2; N <= 10000; ++N) {
        if (!condition_c(N).satisfied)
            continue;
        for (std::uint64_t d : phi_divisors_mobius(N).divisors) {
            if (d < 2 || (N % 2 == 0 && d == 2))
                continue;
            CAPTURE(N);
            CAPTURE(d);
            REQUIRE(condition_c(d).satisfied);
        }
    }
    CHECK(!condition_c(2).satisfied);
}

TEST_CASE("parity bridge between m and 2m") {
    for (std::uint64_t m = 3; m <= 9999; m += 2)
        REQUIRE(condition_c(m).satisfied == condition_c(2 * m).satisfied);
}

TEST_CASE("even quartic classifier") {
    CHECK(even_quartic_class(BigInt(3), BigInt(1)) == QuarticClass::V4);
    CHECK(even_quartic_class(BigInt(-4), BigInt(2)) == QuarticClass::C4);
    CHECK(even_quartic_class(BigInt(0), BigInt(-2)) == QuarticClass::D4);
}
