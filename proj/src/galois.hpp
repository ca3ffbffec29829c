#ifndef MONOCYC_GALOIS_HPP
#define MONOCYC_GALOIS_HPP

#include <cstdint>
#include <string>

#include "intpoly.hpp"
#include "numtheory.hpp"

namespace monocyc {

// Which arm of the modulus condition matched. Odd N must be p^a or p^a q^b
// with gcd(phi(p^a), phi(q^b)) = 2; even N must be twice such a value
// (p, q distinct odd primes). Everything else fails, including N divisible
// by 4.
enum class CBranch {
    PrimePower,        // p^a
    TwoPrimePower,     // 2 p^a
    PrimePowerPair,    // p^a q^b
    TwoPrimePowerPair, // 2 p^a q^b
    Fails,
};

const char* branch_name(CBranch b) noexcept;

struct ConditionCVerdict {
    std::uint64_t N = 0;
    bool satisfied = false;
    CBranch branch = CBranch::Fails;
    std::uint64_t p = 0, a = 0;
    std::uint64_t q = 0, b = 0;
    std::uint64_t gamma = 0; // gcd(phi(p^a), phi(q^b)) in the pair branches
    std::string fail_reason;
};

ConditionCVerdict condition_c(std::uint64_t N);

// Cyclicity of Gal(Q(zeta_N + zeta_N^-1)/Q), asserted on the moduli with
// N odd or N = 2 (mod 4). Multiples of 4 are refused (UnsupportedModulus):
// for those the unit-group oracle is reported without an accompanying claim.
bool real_cyclotomic_gal_cyclic(std::uint64_t N);

// Per-factor Galois facts for Omega_d, cross-checked against the unit-group
// oracle at conductor 2d. The two routes must agree.
struct OmegaGaloisReport {
    std::uint64_t d = 0;
    std::uint64_t group_order = 0; // phi(d)/2
    bool cyclic = false;
    bool oracle_cyclic = false;
};

OmegaGaloisReport omega_galois_report(std::uint64_t d,
                                      std::uint64_t oracle_bound = kDefaultUnitGroupBound);

// Galois class of an irreducible even quartic x^4 + p x^2 + q:
// V4 when q is a square, C4 when q(p^2 - 4q) is a square, D4 otherwise.
enum class QuarticClass { C4, V4, D4 };

const char* quartic_class_name(QuarticClass c) noexcept;

QuarticClass even_quartic_class(const BigInt& p, const BigInt& q);

} // namespace monocyc

#endif
