#include "sequences.hpp"

#include <mutex>
#include <vector>

namespace monocyc {

namespace {

struct Recurrence {
    IntPoly init0;
    IntPoly init1;
    IntPoly mult;   // multiplier of the previous term
    int second_sign; // sign on the term two back
};

const Recurrence& recurrence_for(SeqKind kind) {
    static const Recurrence w{IntPoly::one(), IntPoly::one(), IntPoly({-2, 1}), -1};
    static const Recurrence v{IntPoly::constant(2), IntPoly({0, 1}), IntPoly({0, 1}), -1};
    static const Recurrence fib{IntPoly::zero(), IntPoly::one(), IntPoly({0, 1}), +1};
    static const Recurrence luc{IntPoly::constant(2), IntPoly({0, 1}), IntPoly({0, 1}), +1};
    switch (kind) {
    case SeqKind::WSmall: return w;
    case SeqKind::VietaLucas: return v;
    case SeqKind::Fibonacci: return fib;
    case SeqKind::Lucas: return luc;
    default: raise(ErrorCode::InvalidArgument, "no direct recurrence for this kind");
    }
}

std::size_t memo_slot(SeqKind kind) {
    switch (kind) {
    case SeqKind::WSmall: return 0;
    case SeqKind::VietaLucas: return 1;
    case SeqKind::Fibonacci: return 2;
    case SeqKind::Lucas: return 3;
    default: return 4;
    }
}

IntPoly term_memoized(SeqKind kind, std::uint64_t n) {
    static std::mutex memo_mutex;
    static std::vector<IntPoly> memo[4];

    std::lock_guard<std::mutex> lock(memo_mutex);
    auto& cache = memo[memo_slot(kind)];
    if (cache.empty()) {
        const Recurrence& rec = recurrence_for(kind);
        cache.push_back(rec.init0);
        cache.push_back(rec.init1);
    }
    if (n < cache.size())
        return cache[n];
    const Recurrence& rec = recurrence_for(kind);
    for (std::size_t k = cache.size(); k <= n; ++k) {
        IntPoly next = rec.mult * cache[k - 1];
        if (rec.second_sign < 0)
            next -= cache[k - 2];
        else
            next += cache[k - 2];
        cache.push_back(std::move(next));
    }
    return cache[n];
}

} // namespace

IntPoly term(SeqKind kind, std::uint64_t n, std::uint64_t bound) {
    if (n > bound)
        raise(ErrorCode::OutOfRange, "sequence index exceeds the configured bound");
    if (kind == SeqKind::WBig)
        return compose_square(term_memoized(SeqKind::WSmall, n));
    return term_memoized(kind, n);
}

BigInt vieta_coefficient(std::uint64_t n, std::uint64_t j) {
    if (n < 1 || j > n / 2)
        raise(ErrorCode::IndexOutOfRange, "vieta coefficient requires 0 <= j <= n/2");
    if (j == 0)
        return BigInt(1);
    // B(n, j) = n * C(n-j-1, j-1) / j, exact in integers
    BigInt binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n - j - 1),
                 static_cast<unsigned long>(j - 1));
    BigInt num = BigInt(static_cast<unsigned long>(n)) * binom;
    BigInt q, r;
    mpz_tdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(j));
    if (r != 0)
        raise(ErrorCode::InternalInconsistency, "vieta coefficient division was not exact");
    return q;
}

bool eisenstein_check(const IntPoly& f, const BigInt& p) {
    if (!f.is_monic())
        raise(ErrorCode::NonMonic, "Eisenstein check requires a monic polynomial");
    if (f.degree() < 1)
        return false;
    for (long i = 0; i < f.degree(); ++i) {
        if (!mpz_divisible_p(f.coeff(static_cast<std::size_t>(i)).get_mpz_t(), p.get_mpz_t()))
            return false;
    }
    BigInt p2 = p * p;
    return !mpz_divisible_p(f.coeff(0).get_mpz_t(), p2.get_mpz_t());
}

} // namespace monocyc
