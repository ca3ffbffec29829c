#include "monocyc.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "cyclotomic.hpp"
#include "galois.hpp"
#include "intpoly.hpp"
#include "monogenicity.hpp"
#include "numtheory.hpp"
#include "sequences.hpp"
#include "textio.hpp"
#include "verify.hpp"

struct mc_poly {
    monocyc::IntPoly value;
};

namespace {

thread_local std::string g_last_error;

mc_status to_status(monocyc::ErrorCode code) {
    using monocyc::ErrorCode;
    switch (code) {
    case ErrorCode::NotDivisible: return MC_ERR_NOT_DIVISIBLE;
    case ErrorCode::ZeroPolynomial: return MC_ERR_ZERO_POLYNOMIAL;
    case ErrorCode::NonMonic: return MC_ERR_NON_MONIC;
    case ErrorCode::ModulusMismatch: return MC_ERR_MODULUS_MISMATCH;
    case ErrorCode::ModulusTooLarge: return MC_ERR_MODULUS_TOO_LARGE;
    case ErrorCode::OutOfRange: return MC_ERR_OUT_OF_RANGE;
    case ErrorCode::IndexOutOfRange: return MC_ERR_INDEX_OUT_OF_RANGE;
    case ErrorCode::FactorizationTooHard: return MC_ERR_FACTORIZATION_TOO_HARD;
    case ErrorCode::NotASquareQuotient: return MC_ERR_NOT_A_SQUARE_QUOTIENT;
    case ErrorCode::DegreeMismatch: return MC_ERR_DEGREE_MISMATCH;
    case ErrorCode::EvenIndex: return MC_ERR_EVEN_INDEX;
    case ErrorCode::ProductMismatch: return MC_ERR_PRODUCT_MISMATCH;
    case ErrorCode::ParseError: return MC_ERR_PARSE;
    case ErrorCode::UnsupportedModulus: return MC_ERR_UNSUPPORTED_MODULUS;
    case ErrorCode::InternalInconsistency: return MC_ERR_INTERNAL;
    case ErrorCode::InvalidArgument: return MC_ERR_INVALID_ARGUMENT;
    }
    return MC_ERR_INTERNAL;
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out)
        std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
mc_status guarded(Fn&& fn) {
    try {
        fn();
        return MC_OK;
    } catch (const monocyc::Error& e) {
        g_last_error = e.what();
        return to_status(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return MC_ERR_INTERNAL;
    }
}

mc_status require(bool condition, const char* message) {
    if (condition)
        return MC_OK;
    g_last_error = message;
    return MC_ERR_INVALID_ARGUMENT;
}

} // namespace

extern "C" {

const char* mc_status_name(mc_status status) {
    switch (status) {
    case MC_OK: return "OK";
    case MC_ERR_NOT_DIVISIBLE: return "NotDivisible";
    case MC_ERR_ZERO_POLYNOMIAL: return "ZeroPolynomial";
    case MC_ERR_NON_MONIC: return "NonMonic";
    case MC_ERR_MODULUS_MISMATCH: return "ModulusMismatch";
    case MC_ERR_MODULUS_TOO_LARGE: return "ModulusTooLarge";
    case MC_ERR_OUT_OF_RANGE: return "OutOfRange";
    case MC_ERR_INDEX_OUT_OF_RANGE: return "IndexOutOfRange";
    case MC_ERR_FACTORIZATION_TOO_HARD: return "FactorizationTooHard";
    case MC_ERR_NOT_A_SQUARE_QUOTIENT: return "NotASquareQuotient";
    case MC_ERR_DEGREE_MISMATCH: return "DegreeMismatch";
    case MC_ERR_EVEN_INDEX: return "EvenIndex";
    case MC_ERR_PRODUCT_MISMATCH: return "ProductMismatch";
    case MC_ERR_PARSE: return "ParseError";
    case MC_ERR_UNSUPPORTED_MODULUS: return "UnsupportedModulus";
    case MC_ERR_INTERNAL: return "InternalInconsistency";
    case MC_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    }
    return "Unknown";
}

const char* mc_last_error(void) {
    return g_last_error.c_str();
}

void mc_string_free(char* s) {
    std::free(s);
}

void mc_poly_free(mc_poly* p) {
    delete p;
}

mc_status mc_poly_parse(const char* text, mc_poly** out) {
    if (auto bad = require(text && out, "null argument"))
        return bad;
    return guarded([&] { *out = new mc_poly{monocyc::parse_poly(text)}; });
}

mc_status mc_poly_to_json(const mc_poly* p, char** out) {
    if (auto bad = require(p && out, "null argument"))
        return bad;
    return guarded([&] { *out = dup_string(monocyc::poly_to_json(p->value).dump()); });
}

mc_status mc_poly_to_pretty(const mc_poly* p, char** out) {
    if (auto bad = require(p && out, "null argument"))
        return bad;
    return guarded([&] { *out = dup_string(monocyc::poly_to_pretty(p->value)); });
}

mc_status mc_poly_degree(const mc_poly* p, int64_t* out) {
    if (auto bad = require(p && out, "null argument"))
        return bad;
    *out = p->value.degree();
    return MC_OK;
}

mc_status mc_poly_discriminant(const mc_poly* p, char** decimal_out) {
    if (auto bad = require(p && decimal_out, "null argument"))
        return bad;
    return guarded([&] { *decimal_out = dup_string(monocyc::discriminant(p->value).get_str()); });
}

mc_status mc_poly_eval(const mc_poly* p, const char* t_decimal, char** decimal_out) {
    if (auto bad = require(p && t_decimal && decimal_out, "null argument"))
        return bad;
    return guarded([&] {
        monocyc::BigInt t(t_decimal);
        *decimal_out = dup_string(monocyc::evaluate(p->value, t).get_str());
    });
}

mc_status mc_seq_term(const char* kind, uint64_t n, mc_poly** out) {
    if (auto bad = require(kind && out, "null argument"))
        return bad;
    return guarded([&] {
        const std::string k(kind);
        monocyc::SeqKind sk;
        if (k == "w")
            sk = monocyc::SeqKind::WSmall;
        else if (k == "W")
            sk = monocyc::SeqKind::WBig;
        else if (k == "v")
            sk = monocyc::SeqKind::VietaLucas;
        else if (k == "F")
            sk = monocyc::SeqKind::Fibonacci;
        else if (k == "L")
            sk = monocyc::SeqKind::Lucas;
        else
            monocyc::raise(monocyc::ErrorCode::InvalidArgument,
                           "kind must be one of w, W, v, F, L");
        *out = new mc_poly{monocyc::term(sk, n)};
    });
}

mc_status mc_cyclotomic(uint64_t N, mc_poly** out) {
    if (auto bad = require(out != nullptr, "null argument"))
        return bad;
    return guarded([&] { *out = new mc_poly{monocyc::cyclotomic_poly(N)}; });
}

mc_status mc_real_cyclotomic(uint64_t N, mc_poly** out) {
    if (auto bad = require(out != nullptr, "null argument"))
        return bad;
    return guarded([&] { *out = new mc_poly{monocyc::real_cyclotomic_poly(N)}; });
}

mc_status mc_omega(uint64_t d, mc_poly** out) {
    if (auto bad = require(out != nullptr, "null argument"))
        return bad;
    return guarded([&] { *out = new mc_poly{monocyc::omega(d).poly}; });
}

mc_status mc_factor_w_json(uint64_t n, int enrich, char** json_out) {
    if (auto bad = require(json_out != nullptr, "null argument"))
        return bad;
    return guarded(
        [&] { *json_out = dup_string(monocyc::factor_report_json(n, enrich != 0).dump()); });
}

mc_status mc_condition_c_json(uint64_t N, char** json_out) {
    if (auto bad = require(json_out != nullptr, "null argument"))
        return bad;
    return guarded(
        [&] { *json_out = dup_string(monocyc::to_json(monocyc::condition_c(N)).dump()); });
}

mc_status mc_unit_group_json(uint64_t N, uint64_t bound, char** json_out) {
    if (auto bad = require(json_out != nullptr, "null argument"))
        return bad;
    return guarded([&] {
        auto rep = monocyc::unit_group_mod_pm1(N, bound ? bound : monocyc::kDefaultUnitGroupBound);
        *json_out = dup_string(monocyc::to_json(rep).dump());
    });
}

mc_status mc_field_disc_real_cyclotomic(uint64_t N, char** decimal_out) {
    if (auto bad = require(decimal_out != nullptr, "null argument"))
        return bad;
    return guarded(
        [&] { *decimal_out = dup_string(monocyc::field_disc_real_cyclotomic(N).get_str()); });
}

mc_status mc_monogenic_report_json(const mc_poly* p, uint64_t seed, char** json_out) {
    if (auto bad = require(p && json_out, "null argument"))
        return bad;
    return guarded([&] {
        *json_out = dup_string(monocyc::to_json(monocyc::monogenic_verdict(p->value, seed)).dump());
    });
}

mc_status mc_omega_report_json(uint64_t d, char** json_out) {
    if (auto bad = require(json_out != nullptr, "null argument"))
        return bad;
    return guarded([&] { *json_out = dup_string(monocyc::omega_report_json(d).dump()); });
}

mc_status mc_even_quartic_class(const char* p_decimal, const char* q_decimal, char** class_out) {
    if (auto bad = require(p_decimal && q_decimal && class_out, "null argument"))
        return bad;
    return guarded([&] {
        monocyc::BigInt p(p_decimal), q(q_decimal);
        *class_out = dup_string(monocyc::quartic_class_name(monocyc::even_quartic_class(p, q)));
    });
}

mc_status mc_corpus_report_json(char** json_out) {
    if (auto bad = require(json_out != nullptr, "null argument"))
        return bad;
    return guarded([&] { *json_out = dup_string(monocyc::corpus_report_json().dump()); });
}

mc_status mc_table_json(uint64_t max_n, char** json_out) {
    if (auto bad = require(json_out != nullptr, "null argument"))
        return bad;
    return guarded([&] { *json_out = dup_string(monocyc::table_rows_json(max_n).dump()); });
}

mc_status mc_verify_json(const char* suite, uint64_t max, uint32_t threads, uint64_t seed,
                         char** json_out, uint64_t* failures_out) {
    if (auto bad = require(suite && json_out, "null argument"))
        return bad;
    return guarded([&] {
        uint64_t failures = 0;
        monocyc::Json j;
        if (std::string(suite) == "all") {
            j = monocyc::Json::array();
            for (const auto& rep : monocyc::run_all_suites(threads, seed)) {
                failures += rep.failures.size();
                j.push_back(monocyc::sweep_report_to_json(rep));
            }
        } else {
            auto rep = monocyc::run_suite(suite, max, threads, seed);
            failures = rep.failures.size();
            j = monocyc::sweep_report_to_json(rep);
        }
        *json_out = dup_string(j.dump());
        if (failures_out)
            *failures_out = failures;
    });
}

mc_status mc_suite_names(char** out) {
    if (auto bad = require(out != nullptr, "null argument"))
        return bad;
    std::string names;
    for (const auto& n : monocyc::suite_names()) {
        if (!names.empty())
            names += "\n";
        names += n;
    }
    names += "\nall";
    *out = dup_string(names);
    return MC_OK;
}

} // extern "C"
