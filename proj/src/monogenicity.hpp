#ifndef MONOCYC_MONOGENICITY_HPP
#define MONOCYC_MONOGENICITY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "fppoly.hpp"
#include "intpoly.hpp"
#include "numtheory.hpp"

namespace monocyc {

// Dedekind's criterion at one prime: factor fbar = prod gbar_i^{e_i},
// gbar = prod gbar_i, hbar = fbar / gbar, F = (g*h - f)/p with monic integer
// lifts g, h. The prime does not divide the index iff
// gcd(Fbar, gcd(gbar, hbar)) = 1.
struct DedekindOutcome {
    std::uint64_t p = 0;
    bool passed = false;
    FpPoly gbar;
    FpPoly hbar;
    FpPoly Fbar;
    unsigned gcd_degree = 0;

    DedekindOutcome() : gbar(2), hbar(2), Fbar(2) {}
};

DedekindOutcome dedekind_at_prime(const IntPoly& f, std::uint64_t p);
DedekindOutcome dedekind_at_prime(const IntPoly& f, std::uint64_t p, SplitMix64& rng);

enum class MonoVerdict { Monogenic, NotMonogenic, Unknown };

const char* verdict_name(MonoVerdict v) noexcept;

// Discriminant-driven verdict: factor disc(f) and run Dedekind's criterion at
// every prime whose square divides it. Unknown only when the discriminant
// resists factorization. Irreducibility of f is the caller's obligation.
struct MonogenicReport {
    IntPoly poly;
    BigInt disc;
    std::optional<IntFactorization> disc_factorization; // absent iff verdict Unknown
    std::vector<DedekindOutcome> per_prime;             // primes ascending
    MonoVerdict verdict = MonoVerdict::Unknown;
};

MonogenicReport monogenic_verdict(const IntPoly& f, std::uint64_t seed = 0);

// Field discriminant of the maximal real subfield of the N-th cyclotomic
// field, N >= 3, by the closed three-branch formula:
//   N = p^k or 2p^k (p odd):  p^((p^(k-1)(pk-k-1)-1)/2)
//   N = 2^k, k >= 2:          2^(2^(k-2)(k-1)-1)
//   otherwise:                N^(phi(N)/2) / prod_{p | N} p^(phi(N)/(2(p-1)))
// Always positive; degree-1 cases (N = 3, 4, 6) give 1.
BigInt field_disc_real_cyclotomic(std::uint64_t N);

// disc(Omega_d) == field disc of conductor 2d; true for every valid d.
bool monogenic_by_disc_match(std::uint64_t d);

// disc(f) / field_disc, which must be a perfect square (the squared index).
BigInt index_square(const IntPoly& f, const BigInt& field_disc);

// Discriminant comparison for two monogenic cyclic polynomials of equal
// degree; cyclicity and monogenicity are the caller's hypotheses.
bool equivalent(const IntPoly& f, const IntPoly& g);

} // namespace monocyc

#endif
