#include <doctest.h>

#include "intpoly.hpp"
#include "oracles.hpp"

using namespace monocyc;

namespace {
const IntPoly kW5({9, -30, 27, -9, 1});        // x^4 - 9x^3 + 27x^2 - 30x + 9
const IntPoly kOmega9({-3, 9, -6, 1});         // x^3 - 6x^2 + 9x - 3
const IntPoly kOmega7({-7, 14, -7, 1});        // x^3 - 7x^2 + 14x - 7
} // namespace

TEST_CASE("ring operations") {
    const IntPoly x_minus_2({-2, 1});
    CHECK(x_minus_2 * IntPoly::one() - IntPoly::one() == IntPoly({-3, 1}));
    CHECK(IntPoly({-3, 1}) * kOmega9 == kW5);

    const IntPoly f({5, -5, 1});
    CHECK((f + (-f)).is_zero());
    CHECK((f + (-f)).coeffs().empty());
    CHECK((f + (-f)).degree() == -1);

    // trimming of phantom leading zeros
    CHECK(IntPoly(std::vector<BigInt>{BigInt(1), BigInt(2), BigInt(0)}).degree() == 1);
}

TEST_CASE("exact division") {
    CHECK(divide_exact(kW5, IntPoly({-3, 1})) == kOmega9);
    CHECK(divide_exact(kOmega7, IntPoly::one()) == kOmega7);
    CHECK_THROWS_AS((void)divide_exact(IntPoly({5, -5, 1}), IntPoly({-1, 1})), Error);
    CHECK(!try_divide_exact(IntPoly({5, -5, 1}), IntPoly({-1, 1})));
    CHECK_THROWS_AS((void)divide_exact(kW5, IntPoly::zero()), Error);

    // non-monic divisors still divide exactly when they do divide
    CHECK(divide_exact(IntPoly({2, 4, 2}), IntPoly({2, 2})) == IntPoly({1, 1}));
}

TEST_CASE("taylor shift") {
    CHECK(taylor_shift(IntPoly({1, -2, -1, 1}), BigInt(-2)) == kOmega7);
    const IntPoly f({3, 1, 4, 1});
    CHECK(taylor_shift(f, BigInt(0)) == f);
    CHECK(taylor_shift(IntPoly({0, 0, 1}), BigInt(1)) == IntPoly({1, 2, 1}));

    SplitMix64 rng(42);
    for (int i = 0; i < 200; ++i) {
        IntPoly g = oracle::random_poly(rng, 8, 50);
        BigInt c = static_cast<long>(rng.below(21)) - 10;
        CHECK(taylor_shift(taylor_shift(g, c), -c) == g);
    }
}

TEST_CASE("compose square") {
    CHECK(compose_square(IntPoly({-3, 1})) == IntPoly({-3, 0, 1}));
    CHECK(compose_square(IntPoly({5, -5, 1})) == IntPoly({5, 0, -5, 0, 1}));
    CHECK(compose_square(IntPoly::zero()).is_zero());

    SplitMix64 rng(7);
    for (int i = 0; i < 200; ++i) {
        IntPoly f = oracle::random_poly(rng, 6, 40);
        BigInt t = static_cast<long>(rng.below(41)) - 20;
        CHECK(evaluate(compose_square(f), t) == evaluate(f, t * t));
    }
}

TEST_CASE("evaluate") {
    CHECK(evaluate(kOmega7, BigInt(0)) == -7);
    CHECK(evaluate(IntPoly({-3, 1}), BigInt(3)) == 0);
    CHECK(evaluate(IntPoly({5, -5, 1}), BigInt(1)) == 1);
}

TEST_CASE("resultant basics") {
    CHECK(resultant(IntPoly({-1, 0, 1}), IntPoly({-2, 1})) == 3);
    CHECK_THROWS_AS((void)resultant(IntPoly::zero(), IntPoly::one()), Error);

    // constant arguments
    CHECK(resultant(IntPoly({-1, 0, 1}), IntPoly::constant(5)) == 25);
    CHECK(resultant(IntPoly::constant(5), IntPoly({-1, 0, 1})) == 25);
}

TEST_CASE("resultant matches the Sylvester determinant oracle") {
    SplitMix64 rng(2024);
    int done = 0;
    while (done < 1000) {
        IntPoly f = oracle::random_poly(rng, 6, 100);
        IntPoly g = oracle::random_poly(rng, 6, 100);
        if (f.is_zero() || g.is_zero() || f.degree() + g.degree() == 0)
            continue;
        CAPTURE(done);
        REQUIRE(resultant(f, g) == oracle::sylvester_resultant(f, g));
        ++done;
    }
}

TEST_CASE("resultant symmetry") {
    SplitMix64 rng(99);
    for (int i = 0; i < 300; ++i) {
        IntPoly f = oracle::random_poly(rng, 5, 30);
        IntPoly g = oracle::random_poly(rng, 5, 30);
        if (f.is_zero() || g.is_zero())
            continue;
        BigInt lhs = resultant(f, g);
        BigInt rhs = resultant(g, f);
        if ((f.degree() * g.degree()) % 2 == 1)
            CHECK(lhs == -rhs);
        else
            CHECK(lhs == rhs);
    }
}

TEST_CASE("discriminant") {
    CHECK(discriminant(IntPoly({5, -5, 1})) == 5);
    CHECK(discriminant(IntPoly({0, -3, 0, 1})) == 108);
    CHECK(discriminant(IntPoly({-3, 1})) == 1);
    CHECK_THROWS_AS((void)discriminant(IntPoly({1, 0, 2})), Error);
    CHECK_THROWS_AS((void)discriminant(IntPoly::zero()), Error);
    CHECK_THROWS_AS((void)discriminant(IntPoly::one()), Error);
}

TEST_CASE("discriminant multiplicativity") {
    SplitMix64 rng(5150);
    for (int i = 0; i < 200; ++i) {
        IntPoly f = oracle::random_poly(rng, 4, 20, /*monic=*/true);
        IntPoly g = oracle::random_poly(rng, 4, 20, /*monic=*/true);
        if (f.degree() < 1 || g.degree() < 1)
            continue;
        BigInt r = resultant(f, g);
        CHECK(discriminant(f * g) == discriminant(f) * discriminant(g) * r * r);
    }
}
