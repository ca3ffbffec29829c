// Exercises the shared-library surface exactly as an external client would:
// only monocyc.h, opaque handles and status codes.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <string>

#include <json.hpp>

#include "monocyc.h"

using Json = nlohmann::ordered_json;

namespace {

// wraps a call that fills a char** result; sequencing is explicit so the
// output pointer is only read after the call returns
template <typename Fn>
std::string take_string(Fn&& fn) {
    char* raw = nullptr;
    REQUIRE(fn(&raw) == MC_OK);
    std::string out(raw);
    mc_string_free(raw);
    return out;
}

} // namespace

TEST_CASE("polynomial handles") {
    mc_poly* p = nullptr;
    REQUIRE(mc_poly_parse("x^3-7x^2+14x-7", &p) == MC_OK);
    int64_t deg = 0;
    CHECK(mc_poly_degree(p, &deg) == MC_OK);
    CHECK(deg == 3);

    CHECK(take_string([&](char** out) { return mc_poly_to_json(p, out); }) ==
          "[\"-7\",\"14\",\"-7\",\"1\"]");
    CHECK(take_string([&](char** out) { return mc_poly_to_pretty(p, out); }) ==
          "x^3 - 7x^2 + 14x - 7");
    CHECK(take_string([&](char** out) { return mc_poly_eval(p, "0", out); }) == "-7");
    CHECK(take_string([&](char** out) { return mc_poly_discriminant(p, out); }) == "49");
    mc_poly_free(p);

    mc_poly* q = nullptr;
    CHECK(mc_poly_parse("x^2-5x+", &q) == MC_ERR_PARSE);
    CHECK(std::string(mc_last_error()).find("position") != std::string::npos);
    CHECK(mc_poly_parse(nullptr, &q) == MC_ERR_INVALID_ARGUMENT);
}

TEST_CASE("sequence terms and omega factors") {
    mc_poly* w4 = nullptr;
    REQUIRE(mc_seq_term("w", 4, &w4) == MC_OK);
    mc_poly* om7 = nullptr;
    REQUIRE(mc_omega(7, &om7) == MC_OK);
    CHECK(take_string([&](char** out) { return mc_poly_to_json(w4, out); }) ==
          take_string([&](char** out) { return mc_poly_to_json(om7, out); }));
    mc_poly_free(w4);
    mc_poly_free(om7);

    mc_poly* bad = nullptr;
    CHECK(mc_seq_term("z", 4, &bad) == MC_ERR_INVALID_ARGUMENT);
    CHECK(mc_omega(6, &bad) == MC_ERR_EVEN_INDEX);
}

TEST_CASE("cyclotomic constructions") {
    mc_poly* phi12 = nullptr;
    REQUIRE(mc_cyclotomic(12, &phi12) == MC_OK);
    CHECK(take_string([&](char** out) { return mc_poly_to_pretty(phi12, out); }) ==
          "x^4 - x^2 + 1");
    mc_poly_free(phi12);

    mc_poly* psi11 = nullptr;
    REQUIRE(mc_real_cyclotomic(11, &psi11) == MC_OK);
    CHECK(take_string([&](char** out) { return mc_poly_to_pretty(psi11, out); }) ==
          "x^5 + x^4 - 4x^3 - 3x^2 + 3x + 1");
    mc_poly_free(psi11);
}

TEST_CASE("structured reports") {
    Json factor =
        Json::parse(take_string([](char** out) { return mc_factor_w_json(5, 0, out); }));
    CHECK(factor["n"] == 5);
    CHECK(factor["modulus"] == 9);
    REQUIRE(factor["factors"].size() == 2);
    CHECK(factor["factors"][1]["coeffs"].dump() == "[\"-3\",\"9\",\"-6\",\"1\"]");

    Json cc = Json::parse(take_string([](char** out) { return mc_condition_c_json(63, out); }));
    CHECK(cc["satisfied"] == false);
    CHECK(cc["gamma"] == 6);

    Json ug =
        Json::parse(take_string([](char** out) { return mc_unit_group_json(15, 0, out); }));
    CHECK(ug["group_order"] == 4);
    CHECK(ug["is_cyclic"] == true);
    CHECK(ug["witness"] == 2);

    CHECK(take_string([](char** out) { return mc_field_disc_real_cyclotomic(15, out); }) ==
          "1125");

    mc_poly* f = nullptr;
    REQUIRE(mc_poly_parse("x^6+7x^4+14x^2+7", &f) == MC_OK);
    Json mono =
        Json::parse(take_string([&](char** out) { return mc_monogenic_report_json(f, 0, out); }));
    CHECK(mono["verdict"] == "NotMonogenic");
    mc_poly_free(f);

    Json omrep = Json::parse(take_string([](char** out) { return mc_omega_report_json(9, out); }));
    CHECK(omrep["disc"] == "81");
    CHECK(omrep["field_disc"] == "81");
    CHECK(omrep["monogenic"] == "Monogenic");
    CHECK(omrep["cyclic"] == true);

    CHECK(take_string([](char** out) { return mc_even_quartic_class("3", "1", out); }) == "V4");
    CHECK(take_string([](char** out) { return mc_even_quartic_class("-4", "2", out); }) == "C4");

    Json corpus = Json::parse(take_string([](char** out) { return mc_corpus_report_json(out); }));
    CHECK(corpus["ok"] == true);

    Json table = Json::parse(take_string([](char** out) { return mc_table_json(5, out); }));
    REQUIRE(table.size() == 4);
    CHECK(table[3]["modulus"] == 9);
}

TEST_CASE("verification sweeps through the C surface") {
    uint64_t failures = 123;
    Json rep = Json::parse(take_string(
        [&](char** out) { return mc_verify_json("products", 25, 2, 0, out, &failures); }));
    CHECK(failures == 0);
    CHECK(rep["suite"] == "products");
    CHECK(rep["ok"] == true);

    Json corpus_rep = Json::parse(take_string(
        [&](char** out) { return mc_verify_json("corpus", 0, 1, 0, out, &failures); }));
    CHECK(failures == 0);
    CHECK(corpus_rep["ok"] == true);

    char* raw = nullptr;
    CHECK(mc_verify_json("bogus", 0, 1, 0, &raw, &failures) == MC_ERR_INVALID_ARGUMENT);

    std::string list = take_string([](char** out) { return mc_suite_names(out); });
    CHECK(list.find("products") != std::string::npos);
    CHECK(list.find("all") != std::string::npos);
}

TEST_CASE("status names") {
    CHECK(std::string(mc_status_name(MC_OK)) == "OK");
    CHECK(std::string(mc_status_name(MC_ERR_PRODUCT_MISMATCH)) == "ProductMismatch");
}
