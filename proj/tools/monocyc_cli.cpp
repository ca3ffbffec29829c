// Command-line front end. Talks to the library exclusively through the C API
// in monocyc.h; text and CSV renderings are produced here from the JSON the
// library emits.

#include <cstdint>
#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "monocyc.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

struct StringDeleter {
    void operator()(char* s) const { mc_string_free(s); }
};
using CString = std::unique_ptr<char, StringDeleter>;

struct PolyDeleter {
    void operator()(mc_poly* p) const { mc_poly_free(p); }
};
using Poly = std::unique_ptr<mc_poly, PolyDeleter>;

[[noreturn]] void die(mc_status status) {
    std::fprintf(stderr, "error: %s: %s\n", mc_status_name(status), mc_last_error());
    std::exit(status == MC_ERR_INVALID_ARGUMENT || status == MC_ERR_OUT_OF_RANGE ||
                      status == MC_ERR_PARSE
                  ? kExitUsage
                  : kExitVerifyFailure);
}

CString take(mc_status status, char* raw) {
    if (status != MC_OK)
        die(status);
    return CString(raw);
}

std::string join(const Json& arr, const std::string& sep) {
    std::string out;
    for (const auto& el : arr) {
        if (!out.empty())
            out += sep;
        out += el.is_string() ? el.get<std::string>() : el.dump();
    }
    return out;
}

void emit_factor_text(const Json& rep) {
    std::printf("w_%llu factors over modulus %llu:\n",
                static_cast<unsigned long long>(rep["n"].get<std::uint64_t>()),
                static_cast<unsigned long long>(rep["modulus"].get<std::uint64_t>()));
    for (const auto& f : rep["factors"]) {
        std::printf("  d=%-5llu deg=%-3lld %s",
                    static_cast<unsigned long long>(f["d"].get<std::uint64_t>()),
                    static_cast<long long>(f["degree"].get<std::int64_t>()),
                    f.contains("pretty") ? f["pretty"].get<std::string>().c_str()
                                         : f["coeffs"].dump().c_str());
        if (f.contains("disc"))
            std::printf("  disc=%s  monogenic=%s  condition=%s", f["disc"].get<std::string>().c_str(),
                        f["monogenic"].get<std::string>().c_str(),
                        f["condition_c"].get<bool>() ? "satisfied" : "fails");
        std::printf("\n");
    }
}

void emit_factor_csv(const Json& rep) {
    std::printf("n,modulus,d,degree,coeffs,disc,monogenic,condition_c\n");
    for (const auto& f : rep["factors"]) {
        std::printf("%llu,%llu,%llu,%lld,\"%s\",%s,%s,%s\n",
                    static_cast<unsigned long long>(rep["n"].get<std::uint64_t>()),
                    static_cast<unsigned long long>(rep["modulus"].get<std::uint64_t>()),
                    static_cast<unsigned long long>(f["d"].get<std::uint64_t>()),
                    static_cast<long long>(f["degree"].get<std::int64_t>()),
                    join(f["coeffs"], ";").c_str(),
                    f.contains("disc") ? f["disc"].get<std::string>().c_str() : "",
                    f.contains("monogenic") ? f["monogenic"].get<std::string>().c_str() : "",
                    f.contains("condition_c") ? (f["condition_c"].get<bool>() ? "true" : "false")
                                              : "");
    }
}

void emit_table_csv(const Json& rows) {
    std::printf("n,modulus,modulus_factorization,condition_c,divisors,degrees,field_discs,"
                "all_factors_cyclic\n");
    for (const auto& r : rows) {
        std::printf("%llu,%llu,%s,%s,%s,%s,%s,%s\n",
                    static_cast<unsigned long long>(r["n"].get<std::uint64_t>()),
                    static_cast<unsigned long long>(r["modulus"].get<std::uint64_t>()),
                    r["modulus_factorization"].get<std::string>().c_str(),
                    r["condition_c"].get<bool>() ? "true" : "false",
                    join(r["divisors"], ";").c_str(), join(r["degrees"], ";").c_str(),
                    join(r["field_discs"], ";").c_str(),
                    r["all_factors_cyclic"].get<bool>() ? "true" : "false");
    }
}

void emit_sweep_text(const Json& rep) {
    std::printf("suite %-13s max=%-6llu cases=%-6llu failures=%llu (%.1f ms)\n",
                rep["suite"].get<std::string>().c_str(),
                static_cast<unsigned long long>(rep["max"].get<std::uint64_t>()),
                static_cast<unsigned long long>(rep["cases"].get<std::uint64_t>()),
                static_cast<unsigned long long>(rep["failures"].size()),
                rep["wall_ms"].get<double>());
    for (const auto& note : rep["notes"])
        std::printf("  note: %s\n", note.get<std::string>().c_str());
    for (const auto& f : rep["failures"])
        std::printf("  FAIL %s: expected %s, got %s\n", f["case"].get<std::string>().c_str(),
                    f["expected"].get<std::string>().c_str(),
                    f["actual"].get<std::string>().c_str());
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact factorization, monogenicity and cyclicity reports for the w recurrence"};
    app.require_subcommand(1);
    std::string format = "text";

    // factor
    auto* factor = app.add_subcommand("factor", "factor w_n into its omega factors");
    std::uint64_t factor_n = 0;
    factor->add_option("--n", factor_n, "index n >= 2")->required();
    factor->add_option("--format", format, "text | json | csv");

    // omega
    auto* omega_cmd = app.add_subcommand("omega", "construct and report one omega factor");
    std::uint64_t omega_d = 0;
    omega_cmd->add_option("--d", omega_d, "odd index d >= 3")->required();
    omega_cmd->add_option("--format", format, "text | json");

    // condition-c
    auto* cond = app.add_subcommand("condition-c", "decide the modulus condition for N");
    std::uint64_t cond_n = 0;
    cond->add_option("--N", cond_n, "modulus N >= 2")->required();
    cond->add_option("--format", format, "text | json");

    // disc-field
    auto* disc = app.add_subcommand("disc-field",
                                    "field discriminant of the real cyclotomic field of conductor N");
    std::uint64_t disc_n = 0;
    disc->add_option("--N", disc_n, "conductor N >= 3")->required();
    disc->add_option("--format", format, "text | json");

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification sweep");
    std::string suite;
    std::uint64_t verify_max = 0;
    unsigned verify_threads = 1;
    std::uint64_t verify_seed = 0;
    verify->add_option("--suite", suite, "sweep name, or 'all'")->required();
    verify->add_option("--max", verify_max, "sweep bound (0 = suite default)");
    verify->add_option("--threads", verify_threads, "worker threads (default 1)");
    verify->add_option("--seed", verify_seed, "seed for the finite-field splitter");
    verify->add_option("--format", format, "text | json");

    // table
    auto* table = app.add_subcommand("table", "per-n factorization and cyclicity table");
    std::uint64_t table_max = 0;
    table->add_option("--max", table_max, "largest n (>= 2)")->required();
    table->add_option("--format", format, "text | json | csv");

    // classify-quartic
    auto* quartic = app.add_subcommand("classify-quartic",
                                       "Galois class of an irreducible even quartic x^4+px^2+q");
    std::string quartic_poly;
    quartic->add_option("poly", quartic_poly, "polynomial (JSON coefficients or x^4+3x^2+1 form)")
        ->required();

    // corpus
    auto* corpus = app.add_subcommand("corpus", "introductory example corpus report");
    corpus->add_option("--format", format, "text | json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    if (format != "text" && format != "json" && format != "csv") {
        std::fprintf(stderr, "error: unknown format '%s'\n", format.c_str());
        return kExitUsage;
    }

    if (factor->parsed()) {
        if (factor_n < 2) {
            std::fprintf(stderr, "error: --n must be >= 2\n");
            return kExitUsage;
        }
        char* raw = nullptr;
        CString json = take(mc_factor_w_json(factor_n, 1, &raw), raw);
        Json rep = Json::parse(json.get());
        if (format == "json")
            std::printf("%s\n", json.get());
        else if (format == "csv")
            emit_factor_csv(rep);
        else
            emit_factor_text(rep);
        return 0;
    }

    if (omega_cmd->parsed()) {
        char* raw = nullptr;
        CString json = take(mc_omega_report_json(omega_d, &raw), raw);
        if (format == "json") {
            std::printf("%s\n", json.get());
        } else {
            Json rep = Json::parse(json.get());
            std::printf("Omega_%llu = %s\n", static_cast<unsigned long long>(omega_d),
                        rep["pretty"].get<std::string>().c_str());
            std::printf("  degree      %lld\n", static_cast<long long>(rep["degree"].get<std::int64_t>()));
            std::printf("  disc        %s\n", rep["disc"].get<std::string>().c_str());
            std::printf("  field disc  %s\n", rep["field_disc"].get<std::string>().c_str());
            std::printf("  monogenic   %s\n", rep["monogenic"].get<std::string>().c_str());
            std::printf("  cyclic      %s (group order %llu)\n",
                        rep["cyclic"].get<bool>() ? "yes" : "no",
                        static_cast<unsigned long long>(rep["group_order"].get<std::uint64_t>()));
        }
        return 0;
    }

    if (cond->parsed()) {
        char* raw = nullptr;
        CString json = take(mc_condition_c_json(cond_n, &raw), raw);
        if (format == "json") {
            std::printf("%s\n", json.get());
        } else {
            Json rep = Json::parse(json.get());
            std::printf("N=%llu: %s (%s)\n", static_cast<unsigned long long>(cond_n),
                        rep["satisfied"].get<bool>() ? "satisfies the condition"
                                                     : "does not satisfy the condition",
                        rep.contains("reason") ? rep["reason"].get<std::string>().c_str()
                                               : rep["branch"].get<std::string>().c_str());
        }
        return 0;
    }

    if (disc->parsed()) {
        char* raw = nullptr;
        CString value = take(mc_field_disc_real_cyclotomic(disc_n, &raw), raw);
        if (format == "json")
            std::printf("{\"N\":%llu,\"field_disc\":\"%s\"}\n",
                        static_cast<unsigned long long>(disc_n), value.get());
        else
            std::printf("%s\n", value.get());
        return 0;
    }

    if (verify->parsed()) {
        char* raw = nullptr;
        std::uint64_t failures = 0;
        CString json =
            take(mc_verify_json(suite.c_str(), verify_max, verify_threads, verify_seed, &raw,
                                &failures),
                 raw);
        if (format == "json") {
            std::printf("%s\n", json.get());
        } else {
            Json rep = Json::parse(json.get());
            if (rep.is_array()) {
                for (const auto& r : rep)
                    emit_sweep_text(r);
            } else {
                emit_sweep_text(rep);
            }
        }
        return failures == 0 ? 0 : kExitVerifyFailure;
    }

    if (table->parsed()) {
        if (table_max < 2) {
            std::fprintf(stderr, "error: --max must be >= 2\n");
            return kExitUsage;
        }
        char* raw = nullptr;
        CString json = take(mc_table_json(table_max, &raw), raw);
        Json rows = Json::parse(json.get());
        if (format == "json") {
            std::printf("%s\n", json.get());
        } else if (format == "csv") {
            emit_table_csv(rows);
        } else {
            for (const auto& r : rows) {
                std::printf("n=%-4llu 2n-1=%-5llu (%s)  condition=%-9s divisors=[%s]\n",
                            static_cast<unsigned long long>(r["n"].get<std::uint64_t>()),
                            static_cast<unsigned long long>(r["modulus"].get<std::uint64_t>()),
                            r["modulus_factorization"].get<std::string>().c_str(),
                            r["condition_c"].get<bool>() ? "satisfied" : "fails",
                            join(r["divisors"], ",").c_str());
            }
        }
        return 0;
    }

    if (quartic->parsed()) {
        mc_poly* parsed = nullptr;
        mc_status s = mc_poly_parse(quartic_poly.c_str(), &parsed);
        if (s != MC_OK)
            die(s);
        Poly poly(parsed);
        int64_t deg = 0;
        mc_poly_degree(poly.get(), &deg);
        char* jraw = nullptr;
        CString coeffs_json = take(mc_poly_to_json(poly.get(), &jraw), jraw);
        Json coeffs = Json::parse(coeffs_json.get());
        const bool even_quartic = deg == 4 && coeffs[4].get<std::string>() == "1" &&
                                  coeffs[1].get<std::string>() == "0" &&
                                  coeffs[3].get<std::string>() == "0";
        if (!even_quartic) {
            std::fprintf(stderr, "error: expected a monic even quartic x^4 + p x^2 + q\n");
            return kExitUsage;
        }
        char* craw = nullptr;
        CString cls = take(mc_even_quartic_class(coeffs[2].get<std::string>().c_str(),
                                                 coeffs[0].get<std::string>().c_str(), &craw),
                           craw);
        std::printf("%s\n", cls.get());
        return 0;
    }

    if (corpus->parsed()) {
        char* raw = nullptr;
        CString json = take(mc_corpus_report_json(&raw), raw);
        Json rep = Json::parse(json.get());
        if (format == "json") {
            std::printf("%s\n", json.get());
        } else {
            for (const auto& entry : rep["entries"]) {
                std::printf("%-22s %s  [%s]\n", entry["name"].get<std::string>().c_str(),
                            entry["pretty"].get<std::string>().c_str(),
                            entry["ok"].get<bool>() ? "ok" : "FAIL");
                for (const auto& c : entry["checks"])
                    std::printf("    %-16s expected=%s actual=%s\n",
                                c["check"].get<std::string>().c_str(),
                                c["expected"].get<std::string>().c_str(),
                                c["actual"].get<std::string>().c_str());
            }
        }
        return rep["ok"].get<bool>() ? 0 : kExitVerifyFailure;
    }

    return kExitUsage;
}
