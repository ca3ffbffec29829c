// Test-only oracles, kept independent of the implementation paths they
// check: the resultant oracle expands the Sylvester matrix with fraction-free
// elimination, and the finite-field factorization oracle uses exhaustive
// trial division.
#ifndef MONOCYC_TEST_ORACLES_HPP
#define MONOCYC_TEST_ORACLES_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "fppoly.hpp"
#include "intpoly.hpp"

namespace monocyc::oracle {

// determinant of the Sylvester matrix of f and g (Bareiss elimination)
BigInt sylvester_resultant(const IntPoly& f, const IntPoly& g);

// factorization by trial division over all monic polynomials of ascending
// (degree, coefficients); intended for deg f <= 8 and p <= 13
std::vector<std::pair<FpPoly, unsigned>> trial_division_factor(const FpPoly& f);

// count of 1 <= k <= n with gcd(k, n) = 1
std::uint64_t naive_phi(std::uint64_t n);

// random polynomial with degree <= max_degree and |coefficients| <= max_abs
IntPoly random_poly(SplitMix64& rng, unsigned max_degree, long max_abs, bool monic = false);

} // namespace monocyc::oracle

#endif
