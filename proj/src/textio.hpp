#ifndef MONOCYC_TEXTIO_HPP
#define MONOCYC_TEXTIO_HPP

#include <cstdint>
#include <string>

#include <json.hpp>

#include "cyclotomic.hpp"
#include "galois.hpp"
#include "intpoly.hpp"
#include "monogenicity.hpp"
#include "numtheory.hpp"

namespace monocyc {

using Json = nlohmann::ordered_json;

// Canonical textual form: JSON array of decimal strings, ascending
// coefficients, e.g. ["-7","14","-7","1"]. The pretty form is display only.
Json poly_to_json(const IntPoly& f);
IntPoly poly_from_json(const Json& j);
std::string poly_to_pretty(const IntPoly& f);

// Accepts either the canonical JSON array or the pretty form with integer
// coefficients ("x^2-5x+5"). Raises ParseError with a position.
IntPoly parse_poly(const std::string& text);

std::string bigint_str(const BigInt& v);

Json to_json(const IntFactorization& f); // [[p, e], ...] with p as decimal string
Json to_json(const WFactorization& f);   // canonical {n, modulus, factors:[{d,degree,coeffs}]}
Json to_json(const ConditionCVerdict& v);
Json to_json(const UnitGroupReport& r);
Json to_json(const DedekindOutcome& o);
Json to_json(const MonogenicReport& r);
Json to_json(const OmegaGaloisReport& r);

// Assembled reports backing the CLI surface. Factor and omega reports extend
// the canonical shapes with per-factor discriminants and verdicts.
Json factor_report_json(std::uint64_t n, bool enrich);
Json omega_report_json(std::uint64_t d);
Json table_rows_json(std::uint64_t max_n);
Json corpus_report_json();

} // namespace monocyc

#endif
