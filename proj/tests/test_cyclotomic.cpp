#include <doctest.h>

#include "cyclotomic.hpp"
#include "numtheory.hpp"
#include "sequences.hpp"

using namespace monocyc;

namespace {

IntPoly expand_at_x_plus_inv(const IntPoly& f) {
    const long n = f.degree();
    IntPoly acc;
    const IntPoly x2p1({1, 0, 1});
    IntPoly power = IntPoly::one();
    for (long j = 0; j <= n; ++j) {
        const BigInt& c = f.coeff(static_cast<std::size_t>(j));
        if (c != 0)
            acc += IntPoly::constant(c) * power.shifted_up(static_cast<std::size_t>(n - j));
        power *= x2p1;
    }
    return acc;
}

} // namespace

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_poly(1) == IntPoly({-1, 1}));
    CHECK(cyclotomic_poly(2) == IntPoly({1, 1}));
    CHECK(cyclotomic_poly(3) == IntPoly({1, 1, 1}));
    CHECK(cyclotomic_poly(12) == IntPoly({1, 0, -1, 0, 1}));
    CHECK(cyclotomic_poly(105).degree() == 48); // first index with a coefficient of 2

    CHECK_THROWS_AS((void)cyclotomic_poly(0), Error);
    CHECK_THROWS_AS((void)cyclotomic_poly(200000), Error);
}

TEST_CASE("product of cyclotomics over divisors gives x^N - 1") {
    for (std::uint64_t N = 1; N <= 500; ++N) {
        IntPoly prod = IntPoly::one();
        for (std::uint64_t d : phi_divisors_mobius(N).divisors)
            prod *= cyclotomic_poly(d);
        IntPoly expected = IntPoly::monomial(1, static_cast<std::size_t>(N)) - IntPoly::one();
        REQUIRE(prod == expected);
    }
}

TEST_CASE("real cyclotomic polynomials") {
    CHECK(real_cyclotomic_poly(11) == IntPoly({1, 3, -3, -4, 1, 1}));
    CHECK(real_cyclotomic_poly(5) == IntPoly({-1, 1, 1}));
    CHECK(real_cyclotomic_poly(14) == IntPoly({1, -2, -1, 1}));
    CHECK(real_cyclotomic_poly(3) == IntPoly({1, 1}));
    CHECK(real_cyclotomic_poly(4) == IntPoly({0, 1}));
    CHECK(real_cyclotomic_poly(6) == IntPoly({-1, 1}));
    CHECK_THROWS_AS((void)real_cyclotomic_poly(2), Error);

    for (std::uint64_t N = 3; N <= 300; ++N) {
        const IntPoly psi = real_cyclotomic_poly(N);
        const std::uint64_t half_phi = euler_phi(N) / 2;
        REQUIRE(psi.degree() == static_cast<long>(half_phi));
        REQUIRE(psi.is_monic());
        // Phi_N(x) = x^(phi/2) * psi(x + 1/x)
        REQUIRE(expand_at_x_plus_inv(psi) == cyclotomic_poly(N));
    }
}

TEST_CASE("omega factors") {
    CHECK(omega(3).poly == IntPoly({-3, 1}));
    CHECK(omega(7).poly == IntPoly({-7, 14, -7, 1}));
    CHECK(omega(9).poly == IntPoly({-3, 9, -6, 1}));
    CHECK(omega(7).poly == term(SeqKind::WSmall, 4));
    CHECK_THROWS_AS((void)omega(6), Error);
    CHECK_THROWS_AS((void)omega(1), Error);

    for (std::uint64_t d = 3; d <= 101; d += 2) {
        const OmegaFactor f = omega(d);
        REQUIRE(f.poly.is_monic());
        REQUIRE(f.poly.degree() == static_cast<long>(euler_phi(d) / 2));
        if (is_prime_u64(d))
            REQUIRE(eisenstein_check(f.poly, BigInt(static_cast<unsigned long>(d))));
    }
}

TEST_CASE("factorization of w_n") {
    auto f5 = factor_w(5);
    REQUIRE(f5.factors.size() == 2);
    CHECK(f5.factors[0].d == 3);
    CHECK(f5.factors[0].poly == IntPoly({-3, 1}));
    CHECK(f5.factors[1].d == 9);
    CHECK(f5.factors[1].poly == IntPoly({-3, 9, -6, 1}));

    auto f4 = factor_w(4);
    REQUIRE(f4.factors.size() == 1);
    CHECK(f4.factors[0].d == 7);
    CHECK(f4.factors[0].poly == term(SeqKind::WSmall, 4));

    auto f2 = factor_w(2);
    REQUIRE(f2.factors.size() == 1);
    CHECK(f2.factors[0].poly == IntPoly({-3, 1}));

    CHECK_THROWS_AS((void)factor_w(1), Error);

    for (std::uint64_t n = 2; n <= 60; ++n) {
        auto f = factor_w(n); // internal product validation
        std::uint64_t degree_sum = 0;
        for (const auto& of : f.factors)
            degree_sum += static_cast<std::uint64_t>(of.poly.degree());
        REQUIRE(degree_sum == n - 1);
    }
}

TEST_CASE("primitive divisors") {
    CHECK(primitive_divisor(2).poly == IntPoly({-3, 1}));
    CHECK(primitive_divisor(4).poly == term(SeqKind::WSmall, 4));

    const IntPoly p5 = primitive_divisor(5).poly;
    CHECK(p5 == IntPoly({-3, 9, -6, 1}));
    CHECK(try_divide_exact(term(SeqKind::WSmall, 5), p5));
    for (std::uint64_t m = 2; m < 5; ++m)
        CHECK(!try_divide_exact(term(SeqKind::WSmall, m), p5));

    for (std::uint64_t n = 2; n <= 40; ++n) {
        const IntPoly prim = primitive_divisor(n).poly;
        CHECK(try_divide_exact(term(SeqKind::WSmall, n), prim));
        for (std::uint64_t m = 2; m < n; ++m)
            REQUIRE(!try_divide_exact(term(SeqKind::WSmall, m), prim));
        for (std::uint64_t d : phi_divisors_mobius(2 * n - 1).divisors) {
            if (d == 1 || d == 2 * n - 1)
                continue;
            REQUIRE(try_divide_exact(term(SeqKind::WSmall, (d + 1) / 2), omega(d).poly));
        }
    }
}
