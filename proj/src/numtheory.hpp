#ifndef MONOCYC_NUMTHEORY_HPP
#define MONOCYC_NUMTHEORY_HPP

#include <cstdint>
#include <vector>

#include "intpoly.hpp"

namespace monocyc {

// prime factorization with strictly increasing primes
struct IntFactorization {
    std::vector<std::pair<BigInt, unsigned>> pairs;

    BigInt value() const;
};

// Deterministic for all n < 2^64; larger inputs are refused rather than
// answered probabilistically.
bool is_prime(const BigInt& n);
bool is_prime_u64(std::uint64_t n);

// Trial division for small primes, then Brent's rho with certified cofactors.
// A composite cofactor at or beyond 2^64 raises FactorizationTooHard.
IntFactorization factor_int(const BigInt& n);
IntFactorization factor_u64(std::uint64_t n);

struct PhiDivisorsMobius {
    std::uint64_t phi;
    std::vector<std::uint64_t> divisors; // ascending
    int mobius;
};

PhiDivisorsMobius phi_divisors_mobius(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);

// Structure report for (Z/NZ)^* / {+-1}: the order of the class of u is the
// least k with u^k = +-1 (mod N). Computed by a plain element-order scan over
// one representative per class; the scan stops early only once a class of
// full group order has been found.
struct UnitGroupReport {
    std::uint64_t modulus = 0;
    std::uint64_t group_order = 0; // phi(N)/2 for N >= 3
    std::uint64_t max_order = 0;
    bool is_cyclic = false;
    std::uint64_t witness = 0; // smallest residue attaining max_order
};

constexpr std::uint64_t kDefaultUnitGroupBound = 1000000;

UnitGroupReport unit_group_mod_pm1(std::uint64_t N,
                                   std::uint64_t bound = kDefaultUnitGroupBound);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

} // namespace monocyc

#endif
