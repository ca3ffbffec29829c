#include "textio.hpp"

#include <cctype>

#include "sequences.hpp"

namespace monocyc {

std::string bigint_str(const BigInt& v) {
    return v.get_str();
}

Json poly_to_json(const IntPoly& f) {
    Json arr = Json::array();
    for (const auto& c : f.coeffs())
        arr.push_back(c.get_str());
    return arr;
}

IntPoly poly_from_json(const Json& j) {
    if (!j.is_array())
        raise(ErrorCode::ParseError, "expected a JSON array of coefficients");
    std::vector<BigInt> coeffs;
    coeffs.reserve(j.size());
    for (const auto& el : j) {
        if (el.is_string()) {
            try {
                coeffs.emplace_back(el.get<std::string>());
            } catch (const std::invalid_argument&) {
                raise(ErrorCode::ParseError, "coefficient is not a decimal integer: " + el.dump());
            }
        } else if (el.is_number_integer()) {
            coeffs.emplace_back(static_cast<long>(el.get<long long>()));
        } else {
            raise(ErrorCode::ParseError, "coefficient must be a string or integer: " + el.dump());
        }
    }
    return IntPoly(std::move(coeffs));
}

std::string poly_to_pretty(const IntPoly& f) {
    if (f.is_zero())
        return "0";
    std::string out;
    for (long i = f.degree(); i >= 0; --i) {
        const BigInt& c = f.coeff(static_cast<std::size_t>(i));
        if (c == 0)
            continue;
        const bool first = out.empty();
        const bool negative = c < 0;
        BigInt mag = abs(c);
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        const bool unit = (mag == 1) && i > 0;
        if (!unit)
            out += mag.get_str();
        if (i > 0) {
            out += "x";
            if (i > 1)
                out += "^" + std::to_string(i);
        }
    }
    return out;
}

namespace {

[[noreturn]] void parse_fail(const std::string& text, std::size_t pos, const std::string& why) {
    raise(ErrorCode::ParseError,
          "parse error at position " + std::to_string(pos) + ": " + why + " in \"" + text + "\"");
}

IntPoly parse_pretty_poly(const std::string& text) {
    std::size_t i = 0;
    const std::size_t n = text.size();
    auto skip_space = [&] {
        while (i < n && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
    };

    std::vector<BigInt> coeffs;
    auto add_term = [&](const BigInt& c, std::size_t power) {
        if (coeffs.size() <= power)
            coeffs.resize(power + 1, BigInt(0));
        coeffs[power] += c;
    };

    skip_space();
    if (i == n)
        parse_fail(text, i, "empty input");
    bool expect_term = true;
    int sign = 1;
    while (i < n) {
        skip_space();
        if (i == n) {
            if (expect_term)
                parse_fail(text, i, "dangling operator");
            break;
        }
        if (!expect_term) {
            if (text[i] == '+' || text[i] == '-') {
                sign = (text[i] == '-') ? -1 : 1;
                ++i;
                expect_term = true;
                continue;
            }
            parse_fail(text, i, "expected '+' or '-'");
        }
        // term: [digits] ['*'] ['x' ['^' digits]]
        if (text[i] == '+' || text[i] == '-') {
            // unary sign directly on the term
            sign *= (text[i] == '-') ? -1 : 1;
            ++i;
            skip_space();
        }
        std::string digits;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i])))
            digits += text[i++];
        skip_space();
        if (i < n && text[i] == '*') {
            if (digits.empty())
                parse_fail(text, i, "'*' without a coefficient");
            ++i;
            skip_space();
        }
        bool has_var = (i < n && text[i] == 'x');
        if (!has_var && digits.empty())
            parse_fail(text, i, "expected a coefficient or 'x'");
        BigInt coeff = digits.empty() ? BigInt(1) : BigInt(digits);
        coeff *= sign;
        std::size_t power = 0;
        if (has_var) {
            ++i;
            power = 1;
            if (i < n && text[i] == '^') {
                ++i;
                std::string exp;
                while (i < n && std::isdigit(static_cast<unsigned char>(text[i])))
                    exp += text[i++];
                if (exp.empty())
                    parse_fail(text, i, "'^' without an exponent");
                power = std::stoull(exp);
            }
        }
        add_term(coeff, power);
        sign = 1;
        expect_term = false;
    }
    if (expect_term)
        parse_fail(text, i, "dangling operator");
    return IntPoly(std::move(coeffs));
}

} // namespace

IntPoly parse_poly(const std::string& text) {
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
        ++i;
    if (i < text.size() && text[i] == '[') {
        Json j = Json::parse(text, nullptr, false);
        if (j.is_discarded())
            raise(ErrorCode::ParseError, "malformed JSON coefficient array: " + text);
        return poly_from_json(j);
    }
    return parse_pretty_poly(text);
}

Json to_json(const IntFactorization& f) {
    Json arr = Json::array();
    for (const auto& [p, e] : f.pairs)
        arr.push_back(Json::array({p.get_str(), e}));
    return arr;
}

Json to_json(const WFactorization& f) {
    Json factors = Json::array();
    for (const auto& of : f.factors) {
        factors.push_back(Json{{"d", of.d},
                               {"degree", of.poly.degree()},
                               {"coeffs", poly_to_json(of.poly)}});
    }
    return Json{{"n", f.n}, {"modulus", f.modulus()}, {"factors", factors}};
}

Json to_json(const ConditionCVerdict& v) {
    Json j{{"N", v.N}, {"satisfied", v.satisfied}, {"branch", branch_name(v.branch)}};
    switch (v.branch) {
    case CBranch::PrimePower:
    case CBranch::TwoPrimePower:
        j["p"] = v.p;
        j["a"] = v.a;
        break;
    case CBranch::PrimePowerPair:
    case CBranch::TwoPrimePowerPair:
        j["p"] = v.p;
        j["a"] = v.a;
        j["q"] = v.q;
        j["b"] = v.b;
        j["gamma"] = v.gamma;
        break;
    case CBranch::Fails:
        j["reason"] = v.fail_reason;
        if (v.gamma != 0)
            j["gamma"] = v.gamma;
        break;
    }
    return j;
}

Json to_json(const UnitGroupReport& r) {
    return Json{{"modulus", r.modulus},
                {"group_order", r.group_order},
                {"max_order", r.max_order},
                {"is_cyclic", r.is_cyclic},
                {"witness", r.witness}};
}

Json to_json(const DedekindOutcome& o) {
    return Json{{"p", o.p}, {"passed", o.passed}, {"gcd_degree", o.gcd_degree}};
}

Json to_json(const MonogenicReport& r) {
    Json per_prime = Json::array();
    for (const auto& o : r.per_prime)
        per_prime.push_back(to_json(o));
    Json j{{"poly", poly_to_json(r.poly)},
           {"disc", r.disc.get_str()},
           {"verdict", verdict_name(r.verdict)}};
    if (r.disc_factorization)
        j["disc_factorization"] = to_json(*r.disc_factorization);
    j["per_prime"] = per_prime;
    return j;
}

Json to_json(const OmegaGaloisReport& r) {
    return Json{{"d", r.d},
                {"group_order", r.group_order},
                {"cyclic", r.cyclic},
                {"oracle_cyclic", r.oracle_cyclic}};
}

Json factor_report_json(std::uint64_t n, bool enrich) {
    WFactorization f = factor_w(n);
    if (!enrich)
        return to_json(f);
    Json factors = Json::array();
    for (const auto& of : f.factors) {
        Json entry{{"d", of.d},
                   {"degree", of.poly.degree()},
                   {"coeffs", poly_to_json(of.poly)}};
        entry["pretty"] = poly_to_pretty(of.poly);
        entry["disc"] = discriminant(of.poly).get_str();
        entry["monogenic"] = verdict_name(of.poly.degree() >= 2
                                              ? monogenic_verdict(of.poly).verdict
                                              : MonoVerdict::Monogenic);
        entry["condition_c"] = condition_c(of.d).satisfied;
        factors.push_back(std::move(entry));
    }
    return Json{{"n", f.n}, {"modulus", f.modulus()}, {"factors", factors}};
}

Json omega_report_json(std::uint64_t d) {
    OmegaFactor of = omega(d);
    OmegaGaloisReport gal = omega_galois_report(d);
    Json j{{"d", d},
           {"degree", of.poly.degree()},
           {"coeffs", poly_to_json(of.poly)},
           {"pretty", poly_to_pretty(of.poly)},
           {"disc", discriminant(of.poly).get_str()},
           {"field_disc", field_disc_real_cyclotomic(2 * d).get_str()},
           {"monogenic", verdict_name(of.poly.degree() >= 2
                                          ? monogenic_verdict(of.poly).verdict
                                          : MonoVerdict::Monogenic)},
           {"group_order", gal.group_order},
           {"cyclic", gal.cyclic},
           {"condition_c", to_json(condition_c(d))}};
    return j;
}

Json table_rows_json(std::uint64_t max_n) {
    if (max_n < 2)
        raise(ErrorCode::OutOfRange, "table requires max_n >= 2");
    Json rows = Json::array();
    for (std::uint64_t n = 2; n <= max_n; ++n) {
        const std::uint64_t modulus = 2 * n - 1;
        WFactorization f = factor_w(n);
        ConditionCVerdict cc = condition_c(modulus);

        std::string fac_str;
        for (const auto& [p, e] : factor_u64(modulus).pairs) {
            if (!fac_str.empty())
                fac_str += "*";
            fac_str += p.get_str();
            if (e > 1)
                fac_str += "^" + std::to_string(e);
        }

        Json divisors = Json::array();
        Json degrees = Json::array();
        Json field_discs = Json::array();
        for (const auto& of : f.factors) {
            divisors.push_back(of.d);
            degrees.push_back(of.poly.degree());
            field_discs.push_back(field_disc_real_cyclotomic(2 * of.d).get_str());
        }
        rows.push_back(Json{{"n", n},
                            {"modulus", modulus},
                            {"modulus_factorization", fac_str},
                            {"condition_c", cc.satisfied},
                            {"divisors", divisors},
                            {"degrees", degrees},
                            {"field_discs", field_discs},
                            {"all_factors_cyclic", cc.satisfied}});
    }
    return rows;
}

Json corpus_report_json() {
    Json entries = Json::array();
    bool all_ok = true;

    auto add_entry = [&](std::string name, const IntPoly& poly, Json checks, bool ok) {
        all_ok = all_ok && ok;
        entries.push_back(Json{{"name", std::move(name)},
                               {"poly", poly_to_json(poly)},
                               {"pretty", poly_to_pretty(poly)},
                               {"checks", std::move(checks)},
                               {"ok", ok}});
    };
    auto check = [](std::string what, std::string expected, std::string actual) {
        return Json{{"check", std::move(what)},
                    {"expected", expected},
                    {"actual", actual},
                    {"ok", expected == actual}};
    };

    {
        // quartic Fibonacci term: monogenic, Klein-four Galois group
        IntPoly f5 = term(SeqKind::Fibonacci, 5);
        Json checks = Json::array();
        checks.push_back(check("poly", "x^4 + 3x^2 + 1", poly_to_pretty(f5)));
        checks.push_back(check("monogenic", "Monogenic", verdict_name(monogenic_verdict(f5).verdict)));
        checks.push_back(
            check("quartic_class", "V4",
                  quartic_class_name(even_quartic_class(f5.coeff(2), f5.coeff(0)))));
        bool ok = true;
        for (const auto& c : checks)
            ok = ok && c["ok"].get<bool>();
        add_entry("fibonacci_5", f5, std::move(checks), ok);
    }
    {
        // sextic factor of the 14th Fibonacci term: fails Dedekind at some prime
        IntPoly f = parse_poly("x^6+7x^4+14x^2+7");
        Json checks = Json::array();
        checks.push_back(check("divides_F14", "yes",
                               try_divide_exact(term(SeqKind::Fibonacci, 14), f) ? "yes" : "no"));
        checks.push_back(
            check("monogenic", "NotMonogenic", verdict_name(monogenic_verdict(f).verdict)));
        bool ok = true;
        for (const auto& c : checks)
            ok = ok && c["ok"].get<bool>();
        add_entry("fibonacci_14_factor", f, std::move(checks), ok);
    }
    {
        // octic factor of the 15th Lucas term
        IntPoly f = parse_poly("x^8+7x^6+14x^4+8x^2+1");
        Json checks = Json::array();
        checks.push_back(check("divides_L15", "yes",
                               try_divide_exact(term(SeqKind::Lucas, 15), f) ? "yes" : "no"));
        checks.push_back(
            check("monogenic", "NotMonogenic", verdict_name(monogenic_verdict(f).verdict)));
        bool ok = true;
        for (const auto& c : checks)
            ok = ok && c["ok"].get<bool>();
        add_entry("lucas_15_factor", f, std::move(checks), ok);
    }
    {
        // minimal polynomial of zeta_11 + zeta_11^-1
        IntPoly psi = real_cyclotomic_poly(11);
        Json checks = Json::array();
        checks.push_back(check("poly", "x^5 + x^4 - 4x^3 - 3x^2 + 3x + 1", poly_to_pretty(psi)));
        checks.push_back(
            check("monogenic", "Monogenic", verdict_name(monogenic_verdict(psi).verdict)));
        checks.push_back(check("condition_c_11", "satisfied",
                               condition_c(11).satisfied ? "satisfied" : "fails"));
        bool ok = true;
        for (const auto& c : checks)
            ok = ok && c["ok"].get<bool>();
        add_entry("real_cyclotomic_11", psi, std::move(checks), ok);
    }

    return Json{{"entries", std::move(entries)}, {"ok", all_ok}};
}

} // namespace monocyc
