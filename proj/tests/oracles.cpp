#include "oracles.hpp"

#include <algorithm>
#include <numeric>

namespace monocyc::oracle {

BigInt sylvester_resultant(const IntPoly& f, const IntPoly& g) {
    const long m = f.degree(), n = g.degree();
    if (m < 0 || n < 0)
        raise(ErrorCode::ZeroPolynomial, "sylvester oracle requires nonzero inputs");
    const std::size_t size = static_cast<std::size_t>(m + n);
    if (size == 0)
        return BigInt(1);

    // rows 0..n-1 hold f, rows n..n+m-1 hold g, both descending
    std::vector<std::vector<BigInt>> a(size, std::vector<BigInt>(size, BigInt(0)));
    for (long r = 0; r < n; ++r)
        for (long k = 0; k <= m; ++k)
            a[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + k)] =
                f.coeff(static_cast<std::size_t>(m - k));
    for (long r = 0; r < m; ++r)
        for (long k = 0; k <= n; ++k)
            a[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + k)] =
                g.coeff(static_cast<std::size_t>(n - k));

    // Bareiss fraction-free elimination
    int sign = 1;
    BigInt prev(1);
    for (std::size_t k = 0; k + 1 < size; ++k) {
        if (a[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < size && a[swap_row][k] == 0)
                ++swap_row;
            if (swap_row == size)
                return BigInt(0);
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < size; ++i) {
            for (std::size_t j = k + 1; j < size; ++j) {
                BigInt t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign * a[size - 1][size - 1];
}

namespace {

// all monic polynomials of exactly the given degree, ascending coefficient
// vectors in lexicographic order
std::vector<FpPoly> monic_of_degree(std::uint64_t p, long degree) {
    std::vector<FpPoly> out;
    std::vector<std::uint64_t> coeffs(static_cast<std::size_t>(degree) + 1, 0);
    coeffs.back() = 1;
    while (true) {
        out.emplace_back(p, coeffs);
        long i = 0;
        while (i < degree && ++coeffs[static_cast<std::size_t>(i)] == p) {
            coeffs[static_cast<std::size_t>(i)] = 0;
            ++i;
        }
        if (i == degree)
            break;
    }
    return out;
}

} // namespace

std::vector<std::pair<FpPoly, unsigned>> trial_division_factor(const FpPoly& f) {
    std::vector<std::pair<FpPoly, unsigned>> out;
    FpPoly rest = f;
    const std::uint64_t p = f.modulus();
    for (long d = 1; d <= rest.degree() / 2; ++d) {
        for (const FpPoly& cand : monic_of_degree(p, d)) {
            unsigned mult = 0;
            while (true) {
                auto [q, r] = divrem(rest, cand);
                if (!r.is_zero())
                    break;
                rest = q;
                ++mult;
            }
            if (mult)
                out.emplace_back(cand, mult);
            if (rest.degree() < 2 * d)
                break;
        }
    }
    if (rest.degree() >= 1)
        out.emplace_back(make_monic(rest), 1);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree())
            return a.first.degree() < b.first.degree();
        return a.first.coeffs() < b.first.coeffs();
    });
    return out;
}

std::uint64_t naive_phi(std::uint64_t n) {
    std::uint64_t count = 0;
    for (std::uint64_t k = 1; k <= n; ++k)
        if (std::gcd(k, n) == 1)
            ++count;
    return count;
}

IntPoly random_poly(SplitMix64& rng, unsigned max_degree, long max_abs, bool monic) {
    const unsigned deg = static_cast<unsigned>(rng.below(max_degree + 1));
    std::vector<BigInt> coeffs(deg + 1);
    for (auto& c : coeffs) {
        const long span = 2 * max_abs + 1;
        c = static_cast<long>(rng.below(static_cast<std::uint64_t>(span))) - max_abs;
    }
    if (monic)
        coeffs.back() = 1;
    else if (coeffs.back() == 0)
        coeffs.back() = 1; // keep the intended degree
    return IntPoly(std::move(coeffs));
}

} // namespace monocyc::oracle
