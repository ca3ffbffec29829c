#ifndef MONOCYC_FPPOLY_HPP
#define MONOCYC_FPPOLY_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "intpoly.hpp"

namespace monocyc {

// Deterministic generator state for the equal-degree splitter. Callers that
// factor concurrently must use independent states.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed = 0x9e3779b97f4a7c15ull) : state(seed) {}
    std::uint64_t next();
    // uniform in [0, bound)
    std::uint64_t below(std::uint64_t bound);
};

// Univariate polynomial over F_p for a machine-word prime p (p < 2^63).
// Coefficients ascending, reduced into [0, p), no phantom leading zeros.
class FpPoly {
public:
    explicit FpPoly(std::uint64_t p);
    FpPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs);

    std::uint64_t modulus() const { return p_; }
    bool is_zero() const { return coeffs_.empty(); }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    std::size_t size() const { return coeffs_.size(); }
    std::uint64_t coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
    const std::vector<std::uint64_t>& coeffs() const { return coeffs_; }
    std::uint64_t leading() const;
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

    bool operator==(const FpPoly& other) const = default;

    static FpPoly zero(std::uint64_t p) { return FpPoly(p); }
    static FpPoly one(std::uint64_t p) { return FpPoly(p, {1}); }
    static FpPoly x(std::uint64_t p) { return FpPoly(p, {0, 1}); }
    static FpPoly constant(std::uint64_t p, std::uint64_t c) { return FpPoly(p, {c}); }

private:
    std::uint64_t p_;
    std::vector<std::uint64_t> coeffs_;
    void trim();
};

FpPoly reduce_mod(const IntPoly& f, std::uint64_t p);
// lift back to Z[x] with coefficients in [0, p)
IntPoly lift(const FpPoly& f);

FpPoly add(const FpPoly& a, const FpPoly& b);
FpPoly sub(const FpPoly& a, const FpPoly& b);
FpPoly mul(const FpPoly& a, const FpPoly& b);
FpPoly make_monic(const FpPoly& f);
// division with remainder; divisor nonzero
std::pair<FpPoly, FpPoly> divrem(const FpPoly& num, const FpPoly& den);
FpPoly rem(const FpPoly& num, const FpPoly& den);
FpPoly divide_exact_mod_p(const FpPoly& num, const FpPoly& den);
FpPoly derivative(const FpPoly& f);

// monic gcd; gcd(0, 0) = 0
FpPoly gcd_mod_p(const FpPoly& a, const FpPoly& b);

// base^e mod m, exponent an arbitrary-precision nonnegative integer
FpPoly powmod(const FpPoly& base, const BigInt& e, const FpPoly& m);

// Squarefree decomposition of a monic nonzero polynomial: pairwise-coprime
// monic squarefree parts with multiplicities, product reconstructs the input.
// Handles vanishing derivatives by p-th root extraction.
std::vector<std::pair<FpPoly, unsigned>> squarefree_decomposition(const FpPoly& f);

// Complete factorization into monic irreducibles, deterministically ordered
// by (degree, coefficient sequence). Pipeline: squarefree -> distinct-degree
// -> equal-degree splitting (Cantor-Zassenhaus for odd p, trace map for p=2).
std::vector<std::pair<FpPoly, unsigned>> factor_mod_p(const FpPoly& f, SplitMix64& rng);
std::vector<std::pair<FpPoly, unsigned>> factor_mod_p(const FpPoly& f);

} // namespace monocyc

#endif
