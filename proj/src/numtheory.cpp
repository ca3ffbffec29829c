#include "numtheory.hpp"

#include "fppoly.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace monocyc {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
    std::uint64_t acc = 1 % m;
    base %= m;
    while (e) {
        if (e & 1)
            acc = mulmod(acc, base, m);
        base = mulmod(base, base, m);
        e >>= 1;
    }
    return acc;
}

// Witness set covering the full 64-bit range.
constexpr std::uint64_t kMillerRabinWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

std::uint64_t brent_rho(std::uint64_t n, SplitMix64& rng) {
    // n odd composite, not a prime power of interest; returns a nontrivial factor
    while (true) {
        std::uint64_t y = rng.below(n - 3) + 2;
        std::uint64_t c = rng.below(n - 2) + 1;
        std::uint64_t m = 128, g = 1, r = 1, q = 1, x = 0, ys = 0;
        while (g == 1) {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i)
                y = (mulmod(y, y, n) + c) % n;
            for (std::uint64_t k = 0; k < r && g == 1; k += m) {
                ys = y;
                const std::uint64_t lim = std::min(m, r - k);
                for (std::uint64_t i = 0; i < lim; ++i) {
                    y = (mulmod(y, y, n) + c) % n;
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
            }
            r <<= 1;
        }
        if (g == n) {
            g = 1;
            while (g == 1) {
                ys = (mulmod(ys, ys, n) + c) % n;
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            }
        }
        if (g != n)
            return g;
    }
}

void factor_u64_into(std::uint64_t n, std::vector<std::uint64_t>& primes, SplitMix64& rng) {
    if (n <= 1)
        return;
    if (is_prime_u64(n)) {
        primes.push_back(n);
        return;
    }
    std::uint64_t d = brent_rho(n, rng);
    factor_u64_into(d, primes, rng);
    factor_u64_into(n / d, primes, rng);
}

} // namespace

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    return std::gcd(a, b);
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p)
            return true;
        if (n % p == 0)
            return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : kMillerRabinWitnesses) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

bool is_prime(const BigInt& n) {
    if (n < 0)
        raise(ErrorCode::InvalidArgument, "primality test requires n >= 0");
    if (!n.fits_ulong_p())
        raise(ErrorCode::OutOfRange, "primality is only decided deterministically below 2^64");
    return is_prime_u64(n.get_ui());
}

BigInt IntFactorization::value() const {
    BigInt v(1);
    for (const auto& [p, e] : pairs) {
        BigInt pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
        v *= pe;
    }
    return v;
}

IntFactorization factor_u64(std::uint64_t n) {
    if (n < 1)
        raise(ErrorCode::InvalidArgument, "factorization requires n >= 1");
    IntFactorization out;
    SplitMix64 rng(0x5eedu);
    std::vector<std::uint64_t> primes;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
        while (n % p == 0) {
            primes.push_back(p);
            n /= p;
        }
    }
    factor_u64_into(n, primes, rng);
    std::sort(primes.begin(), primes.end());
    for (std::uint64_t p : primes) {
        if (!out.pairs.empty() && out.pairs.back().first == BigInt(static_cast<unsigned long>(p)))
            out.pairs.back().second += 1;
        else
            out.pairs.emplace_back(BigInt(static_cast<unsigned long>(p)), 1u);
    }
    return out;
}

IntFactorization factor_int(const BigInt& n) {
    if (n < 1)
        raise(ErrorCode::InvalidArgument, "factorization requires n >= 1");
    IntFactorization out;
    BigInt rest = n;

    // strip small primes first; everything in scope reduces fully here
    for (unsigned long p = 2; p < 100000; p = (p == 2 ? 3 : p + 2)) {
        if (rest == 1)
            break;
        if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            unsigned e = 0;
            while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
                mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
                ++e;
            }
            out.pairs.emplace_back(BigInt(p), e);
        }
        BigInt p2 = BigInt(p) * static_cast<unsigned long>(p);
        if (p2 > rest)
            break;
    }

    if (rest != 1) {
        if (is_prime(rest)) { // raises OutOfRange beyond 2^64
            out.pairs.emplace_back(rest, 1u);
        } else if (!rest.fits_ulong_p()) {
            raise(ErrorCode::FactorizationTooHard, "composite cofactor exceeds 2^64");
        } else {
            IntFactorization tail = factor_u64(rest.get_ui());
            for (auto& pe : tail.pairs)
                out.pairs.push_back(std::move(pe));
        }
    }

    std::sort(out.pairs.begin(), out.pairs.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    // merge equal primes after the sort
    IntFactorization merged;
    for (auto& [p, e] : out.pairs) {
        if (!merged.pairs.empty() && merged.pairs.back().first == p)
            merged.pairs.back().second += e;
        else
            merged.pairs.emplace_back(std::move(p), e);
    }
    return merged;
}

std::uint64_t euler_phi(std::uint64_t n) {
    if (n == 0)
        raise(ErrorCode::InvalidArgument, "phi(0) is undefined here");
    std::uint64_t phi = 1;
    IntFactorization f = factor_u64(n);
    for (const auto& [pz, e] : f.pairs) {
        const std::uint64_t p = pz.get_ui();
        std::uint64_t pe = 1;
        for (unsigned i = 1; i < e; ++i)
            pe *= p;
        phi *= pe * (p - 1);
    }
    return phi;
}

PhiDivisorsMobius phi_divisors_mobius(std::uint64_t n) {
    if (n < 1)
        raise(ErrorCode::InvalidArgument, "requires n >= 1");
    PhiDivisorsMobius out{1, {1}, 1};
    IntFactorization f = factor_u64(n);
    bool squarefree = true;
    for (const auto& [pz, e] : f.pairs) {
        const std::uint64_t p = pz.get_ui();
        if (e > 1)
            squarefree = false;
        std::uint64_t pe = 1;
        for (unsigned i = 1; i < e; ++i)
            pe *= p;
        out.phi *= pe * (p - 1);

        const std::size_t base = out.divisors.size();
        std::uint64_t pk = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j)
                out.divisors.push_back(out.divisors[j] * pk);
        }
    }
    out.mobius = squarefree ? ((f.pairs.size() % 2 == 0) ? 1 : -1) : 0;
    std::sort(out.divisors.begin(), out.divisors.end());
    return out;
}

namespace {

// Barrett reduction for moduli below 2^32: two multiplies and a correction
// instead of a hardware divide on the scan's hot path.
struct BarrettU32 {
    std::uint64_t n;
    std::uint64_t magic; // floor((2^64 - 1) / n): q never overshoots floor(t/n)
    explicit BarrettU32(std::uint64_t n_) : n(n_), magic(~std::uint64_t{0} / n_) {}
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        const std::uint64_t t = a * b; // a, b < 2^32
        std::uint64_t q = static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(t) * magic) >> 64);
        std::uint64_t r = t - q * n; // undershoot is at most 2n
        while (r >= n)
            r -= n;
        return r;
    }
};

} // namespace

UnitGroupReport unit_group_mod_pm1(std::uint64_t N, std::uint64_t bound) {
    if (N < 3)
        raise(ErrorCode::InvalidArgument, "unit group report requires N >= 3");
    if (N > bound)
        raise(ErrorCode::OutOfRange, "modulus exceeds the configured sweep bound");
    if (N >= (std::uint64_t{1} << 32))
        raise(ErrorCode::OutOfRange, "the order scan is limited to 32-bit moduli");

    UnitGroupReport rep;
    rep.modulus = N;
    rep.group_order = euler_phi(N) / 2;
    rep.max_order = 0;

    const BarrettU32 barrett(N); // sweep bound keeps N far below 2^32

    // Classes {u, N-u} are enumerated once via the representative u <= N/2.
    for (std::uint64_t u = 1; 2 * u <= N; ++u) {
        if (std::gcd(u, N) != 1)
            continue;
        std::uint64_t acc = u % N, k = 1;
        while (acc != 1 && acc != N - 1) {
            acc = barrett.mul(acc, u);
            ++k;
        }
        if (k > rep.max_order) {
            rep.max_order = k;
            rep.witness = u;
            if (rep.max_order == rep.group_order)
                break; // a generator class settles cyclicity
        }
    }
    rep.is_cyclic = (rep.max_order == rep.group_order);
    return rep;
}

} // namespace monocyc
