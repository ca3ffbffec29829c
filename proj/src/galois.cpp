#include "galois.hpp"

namespace monocyc {

const char* branch_name(CBranch b) noexcept {
    switch (b) {
    case CBranch::PrimePower: return "PrimePower";
    case CBranch::TwoPrimePower: return "TwoPrimePower";
    case CBranch::PrimePowerPair: return "PrimePowerPair";
    case CBranch::TwoPrimePowerPair: return "TwoPrimePowerPair";
    case CBranch::Fails: return "Fails";
    }
    return "Fails";
}

const char* quartic_class_name(QuarticClass c) noexcept {
    switch (c) {
    case QuarticClass::C4: return "C4";
    case QuarticClass::V4: return "V4";
    case QuarticClass::D4: return "D4";
    }
    return "D4";
}

ConditionCVerdict condition_c(std::uint64_t N) {
    if (N < 2)
        raise(ErrorCode::OutOfRange, "condition is defined for N >= 2");

    ConditionCVerdict v;
    v.N = N;

    const bool even = (N % 2 == 0);
    std::uint64_t m = N;
    if (even) {
        m /= 2;
        if (m % 2 == 0) {
            v.fail_reason = "divisible by 4";
            return v;
        }
        if (m == 1) {
            v.fail_reason = "no odd prime power part";
            return v;
        }
    }

    IntFactorization fac = factor_u64(m);
    if (fac.pairs.size() == 1) {
        v.satisfied = true;
        v.branch = even ? CBranch::TwoPrimePower : CBranch::PrimePower;
        v.p = fac.pairs[0].first.get_ui();
        v.a = fac.pairs[0].second;
        return v;
    }
    if (fac.pairs.size() == 2) {
        const std::uint64_t p = fac.pairs[0].first.get_ui();
        const std::uint64_t a = fac.pairs[0].second;
        const std::uint64_t q = fac.pairs[1].first.get_ui();
        const std::uint64_t b = fac.pairs[1].second;
        std::uint64_t pa = 1, qb = 1;
        for (std::uint64_t i = 0; i < a; ++i)
            pa *= p;
        for (std::uint64_t i = 0; i < b; ++i)
            qb *= q;
        const std::uint64_t gamma = gcd_u64(euler_phi(pa), euler_phi(qb));
        v.p = p;
        v.a = a;
        v.q = q;
        v.b = b;
        v.gamma = gamma;
        if (gamma == 2) {
            v.satisfied = true;
            v.branch = even ? CBranch::TwoPrimePowerPair : CBranch::PrimePowerPair;
        } else {
            v.fail_reason = "gcd of the phi values is not 2";
        }
        return v;
    }
    v.fail_reason = "more than two odd prime factors";
    return v;
}

bool real_cyclotomic_gal_cyclic(std::uint64_t N) {
    if (N < 3)
        raise(ErrorCode::OutOfRange, "requires N >= 3");
    if (N % 4 == 0)
        raise(ErrorCode::UnsupportedModulus,
              "cyclicity is asserted only for N odd or N = 2 (mod 4)");
    return condition_c(N).satisfied;
}

OmegaGaloisReport omega_galois_report(std::uint64_t d, std::uint64_t oracle_bound) {
    if (d % 2 == 0)
        raise(ErrorCode::EvenIndex, "report is indexed by odd d >= 3");
    if (d < 3)
        raise(ErrorCode::OutOfRange, "report requires d >= 3");

    OmegaGaloisReport rep;
    rep.d = d;
    rep.group_order = euler_phi(d) / 2;
    rep.cyclic = condition_c(d).satisfied;
    rep.oracle_cyclic = unit_group_mod_pm1(2 * d, oracle_bound).is_cyclic;
    if (rep.cyclic != rep.oracle_cyclic)
        raise(ErrorCode::InternalInconsistency,
              "condition verdict disagrees with the unit-group oracle");
    return rep;
}

QuarticClass even_quartic_class(const BigInt& p, const BigInt& q) {
    if (q >= 0 && mpz_perfect_square_p(q.get_mpz_t()))
        return QuarticClass::V4;
    BigInt t = q * (p * p - 4 * q);
    if (t >= 0 && mpz_perfect_square_p(t.get_mpz_t()))
        return QuarticClass::C4;
    return QuarticClass::D4;
}

} // namespace monocyc
