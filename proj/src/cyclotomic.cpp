#include "cyclotomic.hpp"

#include <mutex>
#include <unordered_map>

#include "numtheory.hpp"
#include "sequences.hpp"

namespace monocyc {

namespace {

IntPoly x_pow_minus_one(std::uint64_t d) {
    IntPoly p = IntPoly::monomial(1, static_cast<std::size_t>(d));
    p -= IntPoly::one();
    return p;
}

} // namespace

IntPoly cyclotomic_poly(std::uint64_t N, std::uint64_t bound) {
    if (N < 1)
        raise(ErrorCode::InvalidArgument, "cyclotomic index must be >= 1");
    if (N > bound)
        raise(ErrorCode::OutOfRange, "cyclotomic index exceeds the configured bound");

    static std::mutex cache_mutex;
    static std::unordered_map<std::uint64_t, IntPoly> cache;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(N);
        if (it != cache.end())
            return it->second;
    }

    PhiDivisorsMobius pdm = phi_divisors_mobius(N);
    IntPoly num = IntPoly::one();
    IntPoly den = IntPoly::one();
    for (std::uint64_t d : pdm.divisors) {
        const int mu = phi_divisors_mobius(N / d).mobius;
        if (mu == 1)
            num *= x_pow_minus_one(d);
        else if (mu == -1)
            den *= x_pow_minus_one(d);
    }
    num = divide_exact(num, den);

    if (num.degree() != static_cast<long>(pdm.phi))
        raise(ErrorCode::InternalInconsistency, "cyclotomic degree does not equal phi(N)");

    std::lock_guard<std::mutex> lock(cache_mutex);
    return cache.emplace(N, std::move(num)).first->second;
}

IntPoly real_cyclotomic_poly(std::uint64_t N, std::uint64_t bound) {
    if (N < 3)
        raise(ErrorCode::OutOfRange, "real cyclotomic polynomial requires N >= 3");
    IntPoly phi = cyclotomic_poly(N, bound);
    const std::size_t m = static_cast<std::size_t>(phi.degree()) / 2;

    // Phi_N / x^m = a_m + sum_k a_{m+k} (x^k + x^{-k}) needs the palindrome
    // a_{m+k} = a_{m-k}; then x^k + x^{-k} = v_k(x + 1/x) gives psi_N.
    for (std::size_t k = 1; k <= m; ++k) {
        if (phi.coeff(m + k) != phi.coeff(m - k))
            raise(ErrorCode::InternalInconsistency, "cyclotomic polynomial is not palindromic");
    }
    IntPoly psi = IntPoly::constant(phi.coeff(m));
    for (std::size_t k = 1; k <= m; ++k) {
        if (phi.coeff(m + k) == 0)
            continue;
        psi += IntPoly::constant(phi.coeff(m + k)) * term(SeqKind::VietaLucas, k);
    }
    if (psi.degree() != static_cast<long>(m) || !psi.is_monic())
        raise(ErrorCode::InternalInconsistency, "real cyclotomic polynomial has the wrong shape");
    return psi;
}

OmegaFactor omega(std::uint64_t d) {
    if (d % 2 == 0)
        raise(ErrorCode::EvenIndex, "omega is indexed by odd d >= 3");
    if (d < 3)
        raise(ErrorCode::OutOfRange, "omega requires d >= 3");
    OmegaFactor out;
    out.d = d;
    out.poly = taylor_shift(real_cyclotomic_poly(2 * d), BigInt(-2));
    return out;
}

WFactorization factor_w(std::uint64_t n) {
    if (n < 2)
        raise(ErrorCode::OutOfRange, "factorization of w_n requires n >= 2");
    WFactorization out;
    out.n = n;
    const std::uint64_t modulus = 2 * n - 1;

    IntPoly product = IntPoly::one();
    for (std::uint64_t d : phi_divisors_mobius(modulus).divisors) {
        if (d == 1)
            continue;
        OmegaFactor f = omega(d);
        product *= f.poly;
        out.factors.push_back(std::move(f));
    }
    if (product != term(SeqKind::WSmall, n))
        raise(ErrorCode::ProductMismatch, "product of Omega factors does not reproduce w_n");
    return out;
}

OmegaFactor primitive_divisor(std::uint64_t n) {
    if (n < 2)
        raise(ErrorCode::OutOfRange, "primitive divisor requires n >= 2");
    return omega(2 * n - 1);
}

} // namespace monocyc
