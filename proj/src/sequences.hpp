#ifndef MONOCYC_SEQUENCES_HPP
#define MONOCYC_SEQUENCES_HPP

#include <cstdint>

#include "intpoly.hpp"

namespace monocyc {

// w:  w_0 = 1, w_1 = 1, w_n = (x-2) w_{n-1} - w_{n-2}
// W:  W_n = w_n(x^2)
// v:  v_0 = 2, v_1 = x, v_n = x v_{n-1} - v_{n-2}   (Vieta-Lucas)
// F:  F_0 = 0, F_1 = 1, F_n = x F_{n-1} + F_{n-2}   (Fibonacci polynomials)
// L:  L_0 = 2, L_1 = x, L_n = x L_{n-1} + L_{n-2}   (Lucas polynomials)
enum class SeqKind { WSmall, WBig, VietaLucas, Fibonacci, Lucas };

constexpr std::uint64_t kDefaultTermBound = 10000;

// n-th term, computed iteratively and memoized per process run. The memo is
// safe for concurrent use.
IntPoly term(SeqKind kind, std::uint64_t n, std::uint64_t bound = kDefaultTermBound);

// B(n, j): the magnitude of the x^(n-2j) coefficient of v_n.
// B(n, 0) = 1 and B(n, j) = n * C(n-j-1, j-1) / j for 1 <= j <= floor(n/2).
BigInt vieta_coefficient(std::uint64_t n, std::uint64_t j);

// p divides every non-leading coefficient and p^2 does not divide the
// constant term. f must be monic, p prime.
bool eisenstein_check(const IntPoly& f, const BigInt& p);

} // namespace monocyc

#endif
