#ifndef MONOCYC_VERIFY_HPP
#define MONOCYC_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace monocyc {

struct SweepFailure {
    std::string case_id;
    std::string expected;
    std::string actual;
};

struct SweepReport {
    std::string suite;
    std::uint64_t max = 0;
    std::uint64_t cases = 0;
    std::vector<SweepFailure> failures;
    std::vector<std::string> notes; // informational, never counted as failures
    double wall_ms = 0.0;

    bool ok() const { return failures.empty(); }
};

// Known sweep suites, in canonical order. "all" is not included; it expands
// to every suite at its default max.
const std::vector<std::string>& suite_names();
std::uint64_t suite_default_max(const std::string& suite);

// Runs one suite up to max (0 selects the default). threads bounds the fan
// out; the report content is identical for every thread count.
SweepReport run_suite(const std::string& suite, std::uint64_t max = 0, unsigned threads = 1,
                      std::uint64_t seed = 0);

std::vector<SweepReport> run_all_suites(unsigned threads = 1, std::uint64_t seed = 0);

// wall_ms is included; comparisons for determinism should ignore it
nlohmann::ordered_json sweep_report_to_json(const SweepReport& rep);

} // namespace monocyc

#endif
