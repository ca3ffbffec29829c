#include "verify.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <optional>
#include <thread>

#include "cyclotomic.hpp"
#include "galois.hpp"
#include "monogenicity.hpp"
#include "sequences.hpp"
#include "textio.hpp"

namespace monocyc {

namespace {

using CaseFn = std::function<std::optional<SweepFailure>(std::uint64_t)>;

// Runs fn over [lo, hi] with a bounded number of workers, collecting results
// in index order so the report does not depend on the thread count.
void sweep_range(SweepReport& rep, std::uint64_t lo, std::uint64_t hi, unsigned threads,
                 const CaseFn& fn) {
    if (lo > hi)
        return;
    const std::uint64_t count = hi - lo + 1;
    rep.cases += count;
    if (threads <= 1 || count < 2) {
        for (std::uint64_t i = lo; i <= hi; ++i) {
            if (auto f = fn(i))
                rep.failures.push_back(std::move(*f));
        }
        return;
    }
    std::vector<std::optional<SweepFailure>> slots(count);
    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        while (true) {
            const std::uint64_t k = next.fetch_add(1);
            if (k >= count)
                return;
            slots[k] = fn(lo + k);
        }
    };
    std::vector<std::thread> pool;
    const unsigned n_workers = std::min<std::uint64_t>(threads, count);
    pool.reserve(n_workers);
    for (unsigned t = 0; t < n_workers; ++t)
        pool.emplace_back(worker);
    for (auto& t : pool)
        t.join();
    for (auto& slot : slots) {
        if (slot)
            rep.failures.push_back(std::move(*slot));
    }
}

std::optional<SweepFailure> expect_eq(const std::string& case_id, const BigInt& expected,
                                      const BigInt& actual) {
    if (expected == actual)
        return std::nullopt;
    return SweepFailure{case_id, expected.get_str(), actual.get_str()};
}

BigInt pow_big(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

void suite_products(SweepReport& rep, std::uint64_t max, unsigned threads) {
    sweep_range(rep, 2, max, threads, [](std::uint64_t n) -> std::optional<SweepFailure> {
        try {
            WFactorization f = factor_w(n); // validates the product internally
            std::uint64_t degree_sum = 0;
            for (const auto& of : f.factors)
                degree_sum += static_cast<std::uint64_t>(of.poly.degree());
            if (degree_sum != n - 1)
                return SweepFailure{"n=" + std::to_string(n) + " degree-ledger",
                                    std::to_string(n - 1), std::to_string(degree_sum)};
        } catch (const Error& e) {
            return SweepFailure{"n=" + std::to_string(n), "product equals w_n", e.what()};
        }
        return std::nullopt;
    });
}

void suite_discs(SweepReport& rep, std::uint64_t max, unsigned threads) {
    sweep_range(rep, 2, max, threads, [](std::uint64_t n) -> std::optional<SweepFailure> {
        const BigInt m(static_cast<unsigned long>(2 * n - 1));
        return expect_eq("w:n=" + std::to_string(n), pow_big(m, static_cast<unsigned long>(n - 2)),
                         discriminant(term(SeqKind::WSmall, n)));
    });
    sweep_range(rep, 2, 2 * max / 3, threads, [](std::uint64_t n) -> std::optional<SweepFailure> {
        const BigInt m(static_cast<unsigned long>(2 * n - 1));
        const BigInt expected =
            pow_big(BigInt(2), static_cast<unsigned long>(2 * n - 2)) *
            pow_big(m, static_cast<unsigned long>(2 * n - 3));
        return expect_eq("W:n=" + std::to_string(n), expected,
                         discriminant(term(SeqKind::WBig, n)));
    });
    sweep_range(rep, 1, max, threads, [](std::uint64_t n) -> std::optional<SweepFailure> {
        const BigInt expected = pow_big(BigInt(2), static_cast<unsigned long>(n - 1)) *
                                pow_big(BigInt(static_cast<unsigned long>(n)),
                                        static_cast<unsigned long>(n));
        return expect_eq("v:n=" + std::to_string(n), expected,
                         discriminant(term(SeqKind::VietaLucas, n)));
    });
}

void suite_condition_c(SweepReport& rep, std::uint64_t max, unsigned threads) {
    // asserted domain: N odd or N = 2 (mod 4)
    std::atomic<std::uint64_t> quad_total{0}, quad_cyclic{0};
    sweep_range(rep, 3, max, threads, [&](std::uint64_t N) -> std::optional<SweepFailure> {
        const bool predicted = condition_c(N).satisfied;
        const bool actual = unit_group_mod_pm1(N, std::max(N, kDefaultUnitGroupBound)).is_cyclic;
        if (N % 4 == 0) {
            // reported, not asserted
            quad_total.fetch_add(1);
            if (actual)
                quad_cyclic.fetch_add(1);
            return std::nullopt;
        }
        if (predicted != actual)
            return SweepFailure{"N=" + std::to_string(N), predicted ? "cyclic" : "not cyclic",
                                actual ? "cyclic" : "not cyclic"};
        return std::nullopt;
    });
    rep.notes.push_back("multiples of 4 observed cyclic by the oracle (no claim attached): " +
                        std::to_string(quad_cyclic.load()) + " of " +
                        std::to_string(quad_total.load()));
}

void suite_field_disc(SweepReport& rep, std::uint64_t max, unsigned threads) {
    sweep_range(rep, 3, max, threads, [](std::uint64_t N) -> std::optional<SweepFailure> {
        return expect_eq("N=" + std::to_string(N), field_disc_real_cyclotomic(N),
                         discriminant(real_cyclotomic_poly(N)));
    });
}

void suite_dedekind(SweepReport& rep, std::uint64_t max, unsigned threads, std::uint64_t seed) {
    if (max < 3)
        return;
    sweep_range(rep, 0, (max - 3) / 2, threads,
                [seed](std::uint64_t k) -> std::optional<SweepFailure> {
                    const std::uint64_t d = 3 + 2 * k;
                    if (!monogenic_by_disc_match(d))
                        return SweepFailure{"d=" + std::to_string(d) + " disc-match",
                                            "disc(Omega_d) == disc(K)", "mismatch"};
                    const IntPoly poly = omega(d).poly;
                    if (poly.degree() >= 2) {
                        MonoVerdict v = monogenic_verdict(poly, seed).verdict;
                        if (v != MonoVerdict::Monogenic)
                            return SweepFailure{"d=" + std::to_string(d) + " dedekind",
                                                "Monogenic", verdict_name(v)};
                    }
                    return std::nullopt;
                });
}

void suite_primitive(SweepReport& rep, std::uint64_t max, unsigned threads) {
    sweep_range(rep, 2, max, threads, [](std::uint64_t n) -> std::optional<SweepFailure> {
        const IntPoly primitive = omega(2 * n - 1).poly;
        if (!try_divide_exact(term(SeqKind::WSmall, n), primitive))
            return SweepFailure{"n=" + std::to_string(n), "Omega_(2n-1) divides w_n",
                                "does not divide"};
        for (std::uint64_t m = 2; m < n; ++m) {
            if (try_divide_exact(term(SeqKind::WSmall, m), primitive))
                return SweepFailure{"n=" + std::to_string(n) + ",m=" + std::to_string(m),
                                    "no division of earlier terms", "divides w_m"};
        }
        for (std::uint64_t d : phi_divisors_mobius(2 * n - 1).divisors) {
            if (d == 1 || d == 2 * n - 1)
                continue;
            if (!try_divide_exact(term(SeqKind::WSmall, (d + 1) / 2), omega(d).poly))
                return SweepFailure{"n=" + std::to_string(n) + ",d=" + std::to_string(d),
                                    "Omega_d divides w_((d+1)/2)", "does not divide"};
        }
        return std::nullopt;
    });
}

void suite_eisenstein(SweepReport& rep, std::uint64_t max, unsigned threads) {
    std::vector<std::uint64_t> primes;
    for (std::uint64_t p = 3; p <= max; p += 2) {
        if (is_prime_u64(p))
            primes.push_back(p);
    }
    if (primes.empty())
        return;
    sweep_range(rep, 0, primes.size() - 1, threads,
                [&primes](std::uint64_t i) -> std::optional<SweepFailure> {
                    const std::uint64_t p = primes[i];
                    const std::uint64_t n = (p + 1) / 2;
                    const BigInt pz(static_cast<unsigned long>(p));
                    if (!eisenstein_check(term(SeqKind::WSmall, n), pz))
                        return SweepFailure{"w:p=" + std::to_string(p), "Eisenstein", "fails"};
                    if (!eisenstein_check(term(SeqKind::WBig, n), pz))
                        return SweepFailure{"W:p=" + std::to_string(p), "Eisenstein", "fails"};
                    return std::nullopt;
                });
}

void suite_distinctness(SweepReport& rep, std::uint64_t max, unsigned threads) {
    std::vector<std::pair<std::uint64_t, BigInt>> discs;
    for (std::uint64_t n = 2; n <= max; ++n) {
        if (condition_c(2 * n - 1).satisfied)
            discs.emplace_back(n, field_disc_real_cyclotomic(2 * (2 * n - 1)));
    }
    (void)threads;
    rep.cases += discs.size();
    for (std::size_t i = 0; i < discs.size(); ++i) {
        for (std::size_t j = i + 1; j < discs.size(); ++j) {
            if (discs[i].second == discs[j].second) {
                rep.failures.push_back(SweepFailure{
                    "n1=" + std::to_string(discs[i].first) + ",n2=" + std::to_string(discs[j].first),
                    "distinct field discriminants", discs[i].second.get_str()});
            }
        }
    }
    rep.notes.push_back("moduli satisfying the condition: " + std::to_string(discs.size()));
}

void suite_corpus(SweepReport& rep) {
    Json report = corpus_report_json();
    for (const auto& entry : report["entries"]) {
        for (const auto& c : entry["checks"]) {
            rep.cases += 1;
            if (!c["ok"].get<bool>()) {
                rep.failures.push_back(SweepFailure{
                    entry["name"].get<std::string>() + ":" + c["check"].get<std::string>(),
                    c["expected"].get<std::string>(), c["actual"].get<std::string>()});
            }
        }
    }
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "products",  "discs",      "condition-c",  "dedekind", "field-disc",
        "primitive", "eisenstein", "distinctness", "corpus"};
    return names;
}

std::uint64_t suite_default_max(const std::string& suite) {
    if (suite == "products") return 200;
    if (suite == "discs") return 60;
    if (suite == "condition-c") return 20000;
    if (suite == "dedekind") return 105;
    if (suite == "field-disc") return 200;
    if (suite == "primitive") return 100;
    if (suite == "eisenstein") return 500;
    if (suite == "distinctness") return 200;
    if (suite == "corpus") return 0;
    raise(ErrorCode::InvalidArgument, "unknown suite: " + suite);
}

SweepReport run_suite(const std::string& suite, std::uint64_t max, unsigned threads,
                      std::uint64_t seed) {
    SweepReport rep;
    rep.suite = suite;
    rep.max = max ? max : suite_default_max(suite);
    if (threads == 0)
        threads = 1;

    const auto start = std::chrono::steady_clock::now();
    if (suite == "products")
        suite_products(rep, rep.max, threads);
    else if (suite == "discs")
        suite_discs(rep, rep.max, threads);
    else if (suite == "condition-c")
        suite_condition_c(rep, rep.max, threads);
    else if (suite == "dedekind")
        suite_dedekind(rep, rep.max, threads, seed);
    else if (suite == "field-disc")
        suite_field_disc(rep, rep.max, threads);
    else if (suite == "primitive")
        suite_primitive(rep, rep.max, threads);
    else if (suite == "eisenstein")
        suite_eisenstein(rep, rep.max, threads);
    else if (suite == "distinctness")
        suite_distinctness(rep, rep.max, threads);
    else if (suite == "corpus")
        suite_corpus(rep);
    else
        raise(ErrorCode::InvalidArgument, "unknown suite: " + suite);
    const auto stop = std::chrono::steady_clock::now();
    rep.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    return rep;
}

std::vector<SweepReport> run_all_suites(unsigned threads, std::uint64_t seed) {
    std::vector<SweepReport> out;
    out.reserve(suite_names().size());
    for (const auto& name : suite_names())
        out.push_back(run_suite(name, 0, threads, seed));
    return out;
}

nlohmann::ordered_json sweep_report_to_json(const SweepReport& rep) {
    nlohmann::ordered_json failures = nlohmann::ordered_json::array();
    for (const auto& f : rep.failures) {
        failures.push_back(nlohmann::ordered_json{
            {"case", f.case_id}, {"expected", f.expected}, {"actual", f.actual}});
    }
    return nlohmann::ordered_json{{"suite", rep.suite},   {"max", rep.max},
                                  {"cases", rep.cases},   {"failures", failures},
                                  {"notes", rep.notes},   {"ok", rep.ok()},
                                  {"wall_ms", rep.wall_ms}};
}

} // namespace monocyc
