#include "intpoly.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

namespace monocyc {

const char* error_code_name(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::NonMonic: return "NonMonic";
    case ErrorCode::ModulusMismatch: return "ModulusMismatch";
    case ErrorCode::ModulusTooLarge: return "ModulusTooLarge";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::FactorizationTooHard: return "FactorizationTooHard";
    case ErrorCode::NotASquareQuotient: return "NotASquareQuotient";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::EvenIndex: return "EvenIndex";
    case ErrorCode::ProductMismatch: return "ProductMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnsupportedModulus: return "UnsupportedModulus";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "UnknownError";
}

IntPoly::IntPoly(std::initializer_list<long> ascending) {
    coeffs_.reserve(ascending.size());
    for (long c : ascending)
        coeffs_.emplace_back(c);
    trim();
}

IntPoly IntPoly::constant(BigInt c) {
    IntPoly p;
    if (c != 0)
        p.coeffs_.push_back(std::move(c));
    return p;
}

IntPoly IntPoly::monomial(BigInt c, std::size_t k) {
    IntPoly p;
    if (c != 0) {
        p.coeffs_.assign(k + 1, BigInt(0));
        p.coeffs_[k] = std::move(c);
    }
    return p;
}

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

const BigInt& IntPoly::coeff(std::size_t i) const {
    static const BigInt zero(0);
    return i < coeffs_.size() ? coeffs_[i] : zero;
}

const BigInt& IntPoly::leading() const {
    if (coeffs_.empty())
        raise(ErrorCode::ZeroPolynomial, "leading coefficient of the zero polynomial");
    return coeffs_.back();
}

IntPoly IntPoly::operator-() const {
    IntPoly r(*this);
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size(), BigInt(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
        coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size(), BigInt(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
        coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs) {
    if (lhs.is_zero() || rhs.is_zero())
        return IntPoly();
    std::vector<BigInt> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            if (rhs.coeffs_[j] != 0)
                out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return IntPoly(std::move(out));
}

IntPoly IntPoly::shifted_up(std::size_t k) const {
    if (is_zero() || k == 0)
        return *this;
    std::vector<BigInt> out(coeffs_.size() + k, BigInt(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        out[i + k] = coeffs_[i];
    return IntPoly(std::move(out));
}

IntPoly derivative(const IntPoly& f) {
    if (f.degree() < 1)
        return IntPoly();
    std::vector<BigInt> out(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i)
        out[i - 1] = f.coeff(i) * static_cast<unsigned long>(i);
    return IntPoly(std::move(out));
}

std::optional<IntPoly> try_divide_exact(const IntPoly& num, const IntPoly& den) {
    if (den.is_zero())
        raise(ErrorCode::ZeroPolynomial, "division by the zero polynomial");
    if (num.is_zero())
        return IntPoly();
    if (num.degree() < den.degree())
        return std::nullopt;

    // Long division in Z[x]: every quotient coefficient must come out as an
    // exact integer, and the final remainder must vanish.
    std::vector<BigInt> rem = num.coeffs();
    std::vector<BigInt> quot(static_cast<std::size_t>(num.degree() - den.degree()) + 1, BigInt(0));
    const std::size_t dn = den.size();
    std::size_t top = rem.size();
    while (top >= dn) {
        const BigInt& lead = rem[top - 1];
        if (lead != 0) {
            BigInt q, r;
            mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), lead.get_mpz_t(), den.leading().get_mpz_t());
            if (r != 0)
                return std::nullopt;
            const std::size_t off = top - dn;
            quot[off] = q;
            for (std::size_t i = 0; i < dn; ++i)
                rem[off + i] -= q * den.coeff(i);
        }
        --top;
    }
    for (const auto& c : rem)
        if (c != 0)
            return std::nullopt;
    return IntPoly(std::move(quot));
}

IntPoly divide_exact(const IntPoly& num, const IntPoly& den) {
    auto q = try_divide_exact(num, den);
    if (!q)
        raise(ErrorCode::NotDivisible, "polynomial division left a nonzero remainder");
    return *std::move(q);
}

IntPoly taylor_shift(const IntPoly& f, const BigInt& c) {
    if (f.is_zero() || c == 0)
        return f;
    // Horner: f(x+c) = (...((a_n)(x+c) + a_{n-1})(x+c) + ...) + a_0
    IntPoly shift({0, 1});
    // shift = x + c
    shift += IntPoly::constant(c);
    IntPoly acc = IntPoly::constant(f.leading());
    for (long i = f.degree() - 1; i >= 0; --i) {
        acc = acc * shift;
        acc += IntPoly::constant(f.coeff(static_cast<std::size_t>(i)));
    }
    return acc;
}

IntPoly compose_square(const IntPoly& f) {
    if (f.is_zero())
        return f;
    std::vector<BigInt> out(2 * f.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < f.size(); ++i)
        out[2 * i] = f.coeff(i);
    return IntPoly(std::move(out));
}

BigInt evaluate(const IntPoly& f, const BigInt& t) {
    BigInt acc(0);
    for (std::size_t i = f.size(); i-- > 0;) {
        acc *= t;
        acc += f.coeff(i);
    }
    return acc;
}

namespace {

// Pseudo-remainder: returns R with lc(B)^(deg A - deg B + 1) * A = Q*B + R.
IntPoly pseudo_rem(const IntPoly& A, const IntPoly& B) {
    long e = A.degree() - B.degree() + 1;
    const BigInt& d = B.leading();
    IntPoly R = A;
    while (!R.is_zero() && R.degree() >= B.degree()) {
        IntPoly t = B.shifted_up(static_cast<std::size_t>(R.degree() - B.degree()));
        IntPoly scaled = IntPoly::constant(d) * R;
        R = scaled - IntPoly::constant(R.leading()) * t;
        --e;
    }
    BigInt fac;
    mpz_pow_ui(fac.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(std::max(0L, e)));
    return IntPoly::constant(fac) * R;
}

BigInt content(const IntPoly& f) {
    BigInt g(0);
    for (const auto& c : f.coeffs())
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g; // nonnegative
}

BigInt pow_big(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

} // namespace

BigInt resultant(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero())
        raise(ErrorCode::ZeroPolynomial, "resultant of the zero polynomial");

    IntPoly A = f, B = g;
    int sign = 1;
    if (A.degree() < B.degree()) {
        if ((A.degree() & 1) && (B.degree() & 1))
            sign = -sign;
        std::swap(A, B);
    }
    if (B.degree() == 0)
        return sign * pow_big(B.leading(), static_cast<unsigned long>(A.degree()));

    // Subresultant PRS (Cohen, Algorithm 3.3.7): contents out first, then the
    // fraction-free remainder chain with the g/h reduction factors.
    BigInt ca = content(A), cb = content(B);
    A = divide_exact(A, IntPoly::constant(ca));
    B = divide_exact(B, IntPoly::constant(cb));
    BigInt scale = pow_big(ca, static_cast<unsigned long>(B.degree())) *
                   pow_big(cb, static_cast<unsigned long>(A.degree()));

    BigInt gg(1), hh(1);
    while (true) {
        const long da = A.degree(), db = B.degree();
        const unsigned long delta = static_cast<unsigned long>(da - db);
        if ((da & 1) && (db & 1))
            sign = -sign;
        IntPoly R = pseudo_rem(A, B);
        A = std::move(B);
        B = divide_exact(R, IntPoly::constant(gg * pow_big(hh, delta)));
        gg = A.leading();
        if (delta > 0) {
            // h <- g^delta * h^(1-delta), exact
            BigInt num = pow_big(gg, delta);
            BigInt den = pow_big(hh, delta - 1);
            BigInt q, r;
            mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            assert(r == 0);
            hh = q;
        }
        if (B.is_zero())
            return BigInt(0);
        if (B.degree() == 0)
            break;
    }

    // res = s * t * lc(B)^deg(A) / h^(deg(A)-1)
    const unsigned long da = static_cast<unsigned long>(A.degree());
    BigInt num = pow_big(B.leading(), da);
    BigInt den = pow_big(hh, da >= 1 ? da - 1 : 0);
    BigInt q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    assert(r == 0);
    return sign * scale * q;
}

BigInt discriminant(const IntPoly& f) {
    if (f.is_zero())
        raise(ErrorCode::ZeroPolynomial, "discriminant of the zero polynomial");
    if (!f.is_monic())
        raise(ErrorCode::NonMonic, "discriminant requires a monic polynomial");
    const long n = f.degree();
    if (n < 1)
        raise(ErrorCode::NonMonic, "discriminant requires degree >= 1");
    if (n == 1)
        return BigInt(1); // empty product over root pairs
    BigInt res = resultant(f, derivative(f));
    return ((n * (n - 1) / 2) % 2 == 0) ? res : BigInt(-res);
}

} // namespace monocyc
