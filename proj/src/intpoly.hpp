#ifndef MONOCYC_INTPOLY_HPP
#define MONOCYC_INTPOLY_HPP

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "errors.hpp"

namespace monocyc {

using BigInt = mpz_class;

// Dense univariate polynomial over Z, coefficients stored in ascending order
// (coeffs_[i] is the coefficient of x^i). Invariant: the vector is either
// empty (the zero polynomial) or its last entry is nonzero.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    IntPoly(std::initializer_list<long> ascending);

    static IntPoly zero() { return IntPoly(); }
    static IntPoly constant(BigInt c);
    static IntPoly one() { return constant(1); }
    // c * x^k
    static IntPoly monomial(BigInt c, std::size_t k);

    bool is_zero() const { return coeffs_.empty(); }
    // degree of the zero polynomial is reported as -1
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    std::size_t size() const { return coeffs_.size(); }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    // coefficient of x^i; zero beyond the degree
    const BigInt& coeff(std::size_t i) const;
    const BigInt& leading() const; // requires non-zero polynomial
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

    bool operator==(const IntPoly& other) const = default;

    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& rhs);
    IntPoly& operator-=(const IntPoly& rhs);
    friend IntPoly operator+(IntPoly lhs, const IntPoly& rhs) { return lhs += rhs; }
    friend IntPoly operator-(IntPoly lhs, const IntPoly& rhs) { return lhs -= rhs; }
    friend IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs);
    IntPoly& operator*=(const IntPoly& rhs) { return *this = *this * rhs; }

    // multiply by x^k
    IntPoly shifted_up(std::size_t k) const;

private:
    std::vector<BigInt> coeffs_;
    void trim();
};

IntPoly derivative(const IntPoly& f);

// Exact division in Z[x]. divide_exact throws NotDivisible when the divisor
// does not divide (this is how violated product identities surface);
// try_divide_exact is the non-throwing form used by sweep loops.
std::optional<IntPoly> try_divide_exact(const IntPoly& num, const IntPoly& den);
IntPoly divide_exact(const IntPoly& num, const IntPoly& den);

// f(x + c)
IntPoly taylor_shift(const IntPoly& f, const BigInt& c);

// f(x^2)
IntPoly compose_square(const IntPoly& f);

BigInt evaluate(const IntPoly& f, const BigInt& t);

// Resultant via the subresultant pseudo-remainder sequence. Both inputs must
// be nonzero. Signs follow the classical convention
// res(f,g) = lc(f)^deg(g) * prod g(alpha_i) over the roots of f.
BigInt resultant(const IntPoly& f, const IntPoly& g);

// (-1)^(n(n-1)/2) * res(f, f') for monic f of degree n >= 1; degree 1 gives 1.
BigInt discriminant(const IntPoly& f);

} // namespace monocyc

#endif
