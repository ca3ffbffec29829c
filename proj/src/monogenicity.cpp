#include "monogenicity.hpp"

#include <algorithm>

#include "cyclotomic.hpp"

namespace monocyc {

const char* verdict_name(MonoVerdict v) noexcept {
    switch (v) {
    case MonoVerdict::Monogenic: return "Monogenic";
    case MonoVerdict::NotMonogenic: return "NotMonogenic";
    case MonoVerdict::Unknown: return "Unknown";
    }
    return "Unknown";
}

DedekindOutcome dedekind_at_prime(const IntPoly& f, std::uint64_t p, SplitMix64& rng) {
    if (!f.is_monic())
        raise(ErrorCode::NonMonic, "Dedekind's criterion requires a monic polynomial");

    DedekindOutcome out;
    out.p = p;

    FpPoly fbar = reduce_mod(f, p);
    auto factors = factor_mod_p(fbar, rng);

    FpPoly gbar = FpPoly::one(p);
    for (const auto& [irr, mult] : factors) {
        (void)mult;
        gbar = mul(gbar, irr);
    }
    FpPoly hbar = divide_exact_mod_p(fbar, gbar);

    // monic lifts with coefficients in [0, p)
    IntPoly g = lift(gbar);
    IntPoly h = lift(hbar);
    IntPoly gh_minus_f = g * h - f;
    IntPoly F = divide_exact(gh_minus_f, IntPoly::constant(BigInt(static_cast<unsigned long>(p))));

    out.gbar = gbar;
    out.hbar = hbar;
    out.Fbar = reduce_mod(F, p);
    FpPoly common = gcd_mod_p(out.Fbar, gcd_mod_p(gbar, hbar));
    out.gcd_degree = static_cast<unsigned>(std::max(0L, common.degree()));
    out.passed = common.is_one();
    return out;
}

DedekindOutcome dedekind_at_prime(const IntPoly& f, std::uint64_t p) {
    SplitMix64 rng;
    return dedekind_at_prime(f, p, rng);
}

MonogenicReport monogenic_verdict(const IntPoly& f, std::uint64_t seed) {
    if (!f.is_monic())
        raise(ErrorCode::NonMonic, "monogenicity requires a monic polynomial");
    if (f.degree() < 2)
        raise(ErrorCode::InvalidArgument, "monogenicity verdict requires degree >= 2");

    MonogenicReport rep;
    rep.poly = f;
    rep.disc = discriminant(f);
    if (rep.disc == 0)
        raise(ErrorCode::InvalidArgument, "zero discriminant: input is not squarefree");

    BigInt abs_disc = abs(rep.disc);
    IntFactorization fac;
    try {
        fac = factor_int(abs_disc);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::FactorizationTooHard) {
            rep.verdict = MonoVerdict::Unknown;
            return rep;
        }
        throw;
    }
    rep.disc_factorization = fac;

    rep.verdict = MonoVerdict::Monogenic;
    SplitMix64 rng(seed ? seed : 0x9e3779b97f4a7c15ull);
    for (const auto& [p, e] : fac.pairs) {
        if (e < 2)
            continue; // squarefree part cannot divide the index
        if (!p.fits_ulong_p())
            raise(ErrorCode::ModulusTooLarge, "square prime divisor exceeds the modulus bound");
        DedekindOutcome outcome = dedekind_at_prime(f, p.get_ui(), rng);
        if (!outcome.passed)
            rep.verdict = MonoVerdict::NotMonogenic;
        rep.per_prime.push_back(std::move(outcome));
    }
    return rep;
}

BigInt field_disc_real_cyclotomic(std::uint64_t N) {
    if (N < 3)
        raise(ErrorCode::OutOfRange, "field discriminant requires N >= 3");

    IntFactorization fac = factor_u64(N);

    // N = 2^k
    if (fac.pairs.size() == 1 && fac.pairs[0].first == 2) {
        const unsigned k = fac.pairs[0].second;
        // k >= 2; exponent 2^(k-2)(k-1) - 1
        BigInt e = (BigInt(1) << (k - 2)) * (k - 1) - 1;
        BigInt out;
        mpz_ui_pow_ui(out.get_mpz_t(), 2, e.get_ui());
        return out;
    }

    // N = p^k or 2 p^k with p odd
    const bool even = (N % 2 == 0);
    const std::size_t odd_parts = fac.pairs.size() - (even ? 1 : 0);
    const bool doubled_ok = !even || (fac.pairs[0].first == 2 && fac.pairs[0].second == 1);
    if (odd_parts == 1 && doubled_ok) {
        const auto& [pz, k] = fac.pairs[even ? 1 : 0];
        const unsigned long p = pz.get_ui();
        // p^(k-1) (pk - k - 1), then halve after subtracting 1
        BigInt pk1;
        mpz_ui_pow_ui(pk1.get_mpz_t(), p, k - 1);
        BigInt e = pk1 * (BigInt(p) * k - k - 1);
        e = (e - 1) / 2;
        BigInt out;
        mpz_ui_pow_ui(out.get_mpz_t(), p, e.get_ui());
        return out;
    }

    // remaining composite shapes
    const std::uint64_t phi = euler_phi(N);
    BigInt num;
    mpz_ui_pow_ui(num.get_mpz_t(), N, phi / 2);
    BigInt den(1);
    for (const auto& [pz, e] : fac.pairs) {
        (void)e;
        const unsigned long p = pz.get_ui();
        BigInt pe;
        mpz_ui_pow_ui(pe.get_mpz_t(), p, phi / (2 * (p - 1)));
        den *= pe;
    }
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        raise(ErrorCode::InternalInconsistency, "field discriminant quotient is not integral");
    BigInt out;
    mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return out;
}

bool monogenic_by_disc_match(std::uint64_t d) {
    OmegaFactor f = omega(d);
    return discriminant(f.poly) == field_disc_real_cyclotomic(2 * d);
}

BigInt index_square(const IntPoly& f, const BigInt& field_disc) {
    if (field_disc == 0)
        raise(ErrorCode::InvalidArgument, "field discriminant must be nonzero");
    BigInt disc = discriminant(f);
    BigInt q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), disc.get_mpz_t(), field_disc.get_mpz_t());
    if (r != 0 || q < 0 || !mpz_perfect_square_p(q.get_mpz_t()))
        raise(ErrorCode::NotASquareQuotient, "disc(f)/disc(K) is not a perfect square");
    return q;
}

bool equivalent(const IntPoly& f, const IntPoly& g) {
    if (!f.is_monic() || !g.is_monic())
        raise(ErrorCode::NonMonic, "equivalence is defined for monic polynomials");
    if (f.degree() != g.degree())
        raise(ErrorCode::DegreeMismatch, "equivalence is defined for equal degrees");
    return discriminant(f) == discriminant(g);
}

} // namespace monocyc
