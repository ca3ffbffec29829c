#ifndef MONOCYC_CYCLOTOMIC_HPP
#define MONOCYC_CYCLOTOMIC_HPP

#include <cstdint>
#include <vector>

#include "intpoly.hpp"

namespace monocyc {

constexpr std::uint64_t kDefaultCyclotomicBound = 100000;

// N-th cyclotomic polynomial via the Moebius product
// Phi_N = prod_{d | N} (x^d - 1)^{mu(N/d)}, evaluated by exact multiply and
// divide. Degree phi(N).
IntPoly cyclotomic_poly(std::uint64_t N, std::uint64_t bound = kDefaultCyclotomicBound);

// Minimal polynomial psi_N of zeta_N + zeta_N^{-1} (N >= 3): monic of degree
// phi(N)/2 with Phi_N(x) = x^(phi(N)/2) * psi_N(x + 1/x). Constructed from
// the palindromic coefficients of Phi_N in the basis x^k + x^{-k} = v_k(y).
IntPoly real_cyclotomic_poly(std::uint64_t N, std::uint64_t bound = kDefaultCyclotomicBound);

// Monic factor of w with root set shifted by 2 from the real 2d-th
// cyclotomic roots: Omega_d(x) = psi_2d(x - 2), degree phi(d)/2.
struct OmegaFactor {
    std::uint64_t d = 0;
    IntPoly poly;
};

OmegaFactor omega(std::uint64_t d);

// Verified factorization w_n = prod_{d | 2n-1, d > 1} Omega_d.
struct WFactorization {
    std::uint64_t n = 0;
    std::vector<OmegaFactor> factors; // ascending by d

    std::uint64_t modulus() const { return 2 * n - 1; }
};

WFactorization factor_w(std::uint64_t n);

// Omega_{2n-1}: divides w_n and no earlier term.
OmegaFactor primitive_divisor(std::uint64_t n);

} // namespace monocyc

#endif
