#include "fppoly.hpp"

#include <algorithm>
#include <cassert>

namespace monocyc {

namespace {

constexpr std::uint64_t kMaxModulus = 1ull << 62;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
    std::uint64_t acc = 1 % p;
    base %= p;
    while (e) {
        if (e & 1)
            acc = mulmod(acc, base, p);
        base = mulmod(base, base, p);
        e >>= 1;
    }
    return acc;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
    // p prime
    return powmod_u64(a, p - 2, p);
}

void check_same_modulus(const FpPoly& a, const FpPoly& b) {
    if (a.modulus() != b.modulus())
        raise(ErrorCode::ModulusMismatch, "operands live over different prime fields");
}

} // namespace

std::uint64_t SplitMix64::next() {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
    return bound ? next() % bound : 0;
}

FpPoly::FpPoly(std::uint64_t p) : p_(p) {
    if (p < 2 || p >= kMaxModulus)
        raise(ErrorCode::ModulusTooLarge, "modulus must be a machine-word prime");
}

FpPoly::FpPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs) : FpPoly(p) {
    coeffs_ = std::move(coeffs);
    for (auto& c : coeffs_)
        c %= p_;
    trim();
}

void FpPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

std::uint64_t FpPoly::leading() const {
    if (coeffs_.empty())
        raise(ErrorCode::ZeroPolynomial, "leading coefficient of the zero polynomial");
    return coeffs_.back();
}

FpPoly reduce_mod(const IntPoly& f, std::uint64_t p) {
    FpPoly out(p);
    std::vector<std::uint64_t> coeffs(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        BigInt r;
        mpz_mod_ui(r.get_mpz_t(), f.coeff(i).get_mpz_t(), p); // nonnegative remainder
        coeffs[i] = mpz_get_ui(r.get_mpz_t());
    }
    return FpPoly(p, std::move(coeffs));
}

IntPoly lift(const FpPoly& f) {
    std::vector<BigInt> coeffs(f.size());
    for (std::size_t i = 0; i < f.size(); ++i)
        coeffs[i] = BigInt(static_cast<unsigned long>(f.coeff(i)));
    return IntPoly(std::move(coeffs));
}

FpPoly add(const FpPoly& a, const FpPoly& b) {
    check_same_modulus(a, b);
    const std::uint64_t p = a.modulus();
    std::vector<std::uint64_t> out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        std::uint64_t s = a.coeff(i) + b.coeff(i);
        out[i] = s >= p ? s - p : s;
    }
    return FpPoly(p, std::move(out));
}

FpPoly sub(const FpPoly& a, const FpPoly& b) {
    check_same_modulus(a, b);
    const std::uint64_t p = a.modulus();
    std::vector<std::uint64_t> out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        std::uint64_t x = a.coeff(i), y = b.coeff(i);
        out[i] = x >= y ? x - y : x + p - y;
    }
    return FpPoly(p, std::move(out));
}

FpPoly mul(const FpPoly& a, const FpPoly& b) {
    check_same_modulus(a, b);
    const std::uint64_t p = a.modulus();
    if (a.is_zero() || b.is_zero())
        return FpPoly::zero(p);
    std::vector<std::uint64_t> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a.coeff(i) == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::uint64_t t = out[i + j] + mulmod(a.coeff(i), b.coeff(j), p);
            out[i + j] = t >= p ? t - p : t;
        }
    }
    return FpPoly(p, std::move(out));
}

FpPoly make_monic(const FpPoly& f) {
    if (f.is_zero() || f.is_monic())
        return f;
    const std::uint64_t p = f.modulus();
    const std::uint64_t inv = invmod(f.leading(), p);
    std::vector<std::uint64_t> out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i)
        out[i] = mulmod(f.coeff(i), inv, p);
    return FpPoly(p, std::move(out));
}

std::pair<FpPoly, FpPoly> divrem(const FpPoly& num, const FpPoly& den) {
    check_same_modulus(num, den);
    if (den.is_zero())
        raise(ErrorCode::ZeroPolynomial, "division by the zero polynomial");
    const std::uint64_t p = num.modulus();
    if (num.degree() < den.degree())
        return {FpPoly::zero(p), num};
    const std::uint64_t inv = invmod(den.leading(), p);
    std::vector<std::uint64_t> rem = num.coeffs();
    std::vector<std::uint64_t> quot(static_cast<std::size_t>(num.degree() - den.degree()) + 1, 0);
    const std::size_t dn = den.size();
    for (std::size_t top = rem.size(); top >= dn; --top) {
        const std::uint64_t lead = rem[top - 1];
        if (lead == 0)
            continue;
        const std::uint64_t q = mulmod(lead, inv, p);
        const std::size_t off = top - dn;
        quot[off] = q;
        for (std::size_t i = 0; i < dn; ++i) {
            std::uint64_t t = mulmod(q, den.coeff(i), p);
            std::uint64_t& r = rem[off + i];
            r = r >= t ? r - t : r + p - t;
        }
    }
    return {FpPoly(p, std::move(quot)), FpPoly(p, std::move(rem))};
}

FpPoly rem(const FpPoly& num, const FpPoly& den) {
    return divrem(num, den).second;
}

FpPoly divide_exact_mod_p(const FpPoly& num, const FpPoly& den) {
    auto [q, r] = divrem(num, den);
    if (!r.is_zero())
        raise(ErrorCode::NotDivisible, "division over F_p left a nonzero remainder");
    return q;
}

FpPoly derivative(const FpPoly& f) {
    if (f.degree() < 1)
        return FpPoly::zero(f.modulus());
    const std::uint64_t p = f.modulus();
    std::vector<std::uint64_t> out(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i)
        out[i - 1] = mulmod(f.coeff(i), i % p, p);
    return FpPoly(p, std::move(out));
}

FpPoly gcd_mod_p(const FpPoly& a, const FpPoly& b) {
    check_same_modulus(a, b);
    FpPoly x = a, y = b;
    while (!y.is_zero()) {
        FpPoly r = rem(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return make_monic(x);
}

FpPoly powmod(const FpPoly& base, const BigInt& e, const FpPoly& m) {
    assert(e >= 0);
    FpPoly acc = FpPoly::one(m.modulus());
    FpPoly b = rem(base, m);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0)
        return acc;
    for (std::size_t i = bits; i-- > 0;) {
        acc = rem(mul(acc, acc), m);
        if (mpz_tstbit(e.get_mpz_t(), i))
            acc = rem(mul(acc, b), m);
    }
    return acc;
}

namespace {

// Inverse Frobenius on coefficients is the identity over F_p, so the p-th
// root of f(x) = g(x^p) is obtained by keeping every p-th coefficient.
FpPoly pth_root(const FpPoly& f) {
    const std::uint64_t p = f.modulus();
    std::vector<std::uint64_t> out;
    out.reserve(f.size() / p + 1);
    for (std::size_t i = 0; i < f.size(); i += p)
        out.push_back(f.coeff(i));
    return FpPoly(p, std::move(out));
}

void merge_factor(std::vector<std::pair<FpPoly, unsigned>>& acc, const FpPoly& f, unsigned mult) {
    for (auto& [g, m] : acc) {
        if (g == f) {
            m += mult;
            return;
        }
    }
    acc.emplace_back(f, mult);
}

bool factor_order(const std::pair<FpPoly, unsigned>& a, const std::pair<FpPoly, unsigned>& b) {
    if (a.first.degree() != b.first.degree())
        return a.first.degree() < b.first.degree();
    return a.first.coeffs() < b.first.coeffs();
}

// Split a monic squarefree product of irreducibles all of degree d.
void equal_degree_split(const FpPoly& f, long d, SplitMix64& rng, std::vector<FpPoly>& out) {
    const std::uint64_t p = f.modulus();
    if (f.degree() == d) {
        out.push_back(f);
        return;
    }
    FpPoly splitter = FpPoly::one(p);
    while (true) {
        // random nonconstant a with deg a < deg f
        std::vector<std::uint64_t> coeffs(static_cast<std::size_t>(f.degree()));
        for (auto& c : coeffs)
            c = rng.below(p);
        FpPoly a(p, std::move(coeffs));
        if (a.degree() < 1)
            continue;
        FpPoly g = gcd_mod_p(f, a);
        if (!g.is_one() && g.degree() < f.degree()) {
            splitter = g;
            break;
        }
        if (p == 2) {
            // trace map over F_{2^d}
            FpPoly t = a;
            FpPoly term = a;
            for (long i = 1; i < d; ++i) {
                term = rem(mul(term, term), f);
                t = add(t, term);
            }
            g = gcd_mod_p(f, t);
        } else {
            BigInt e;
            mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
            e = (e - 1) / 2;
            FpPoly b = powmod(a, e, f);
            g = gcd_mod_p(f, sub(b, FpPoly::one(p)));
        }
        if (!g.is_one() && g.degree() < f.degree()) {
            splitter = g;
            break;
        }
    }
    equal_degree_split(splitter, d, rng, out);
    equal_degree_split(divide_exact_mod_p(f, splitter), d, rng, out);
}

} // namespace

std::vector<std::pair<FpPoly, unsigned>> squarefree_decomposition(const FpPoly& f) {
    if (f.is_zero() || !f.is_monic())
        raise(ErrorCode::InvalidArgument, "squarefree decomposition requires a monic nonzero input");
    std::vector<std::pair<FpPoly, unsigned>> out;
    if (f.degree() == 0)
        return out;
    const std::uint64_t p = f.modulus();

    FpPoly df = derivative(f);
    if (df.is_zero()) {
        // f = g(x^p): recurse on the p-th root, multiplicities scale by p
        for (auto& [g, m] : squarefree_decomposition(pth_root(f)))
            merge_factor(out, g, m * static_cast<unsigned>(p));
        std::sort(out.begin(), out.end(), factor_order);
        return out;
    }

    FpPoly c = gcd_mod_p(f, df);
    FpPoly w = divide_exact_mod_p(f, c);
    unsigned i = 1;
    while (!w.is_one()) {
        FpPoly y = gcd_mod_p(w, c);
        FpPoly z = divide_exact_mod_p(w, y);
        if (!z.is_one())
            merge_factor(out, z, i);
        w = std::move(y);
        c = divide_exact_mod_p(c, w);
        ++i;
    }
    if (!c.is_one()) {
        // leftover p-th power part
        for (auto& [g, m] : squarefree_decomposition(pth_root(c)))
            merge_factor(out, g, m * static_cast<unsigned>(p));
    }
    std::sort(out.begin(), out.end(), factor_order);
    return out;
}

std::vector<std::pair<FpPoly, unsigned>> factor_mod_p(const FpPoly& f, SplitMix64& rng) {
    if (f.is_zero() || !f.is_monic() || f.degree() < 1)
        raise(ErrorCode::InvalidArgument, "factorization requires a monic polynomial of degree >= 1");
    std::vector<std::pair<FpPoly, unsigned>> out;
    const std::uint64_t p = f.modulus();

    for (const auto& [sq, mult] : squarefree_decomposition(f)) {
        // distinct-degree stage on each squarefree part
        FpPoly g = sq;
        FpPoly h = rem(FpPoly::x(p), g);
        long d = 0;
        while (!g.is_one() && g.degree() >= 2 * (d + 1)) {
            ++d;
            h = powmod(h, BigInt(static_cast<unsigned long>(p)), g);
            FpPoly gd = gcd_mod_p(g, sub(h, FpPoly::x(p)));
            if (!gd.is_one()) {
                std::vector<FpPoly> irreducibles;
                equal_degree_split(gd, d, rng, irreducibles);
                for (const auto& irr : irreducibles)
                    merge_factor(out, irr, mult);
                g = divide_exact_mod_p(g, gd);
                h = rem(h, g);
            }
        }
        if (!g.is_one())
            merge_factor(out, g, mult);
    }
    std::sort(out.begin(), out.end(), factor_order);
    return out;
}

std::vector<std::pair<FpPoly, unsigned>> factor_mod_p(const FpPoly& f) {
    SplitMix64 rng;
    return factor_mod_p(f, rng);
}

} // namespace monocyc
