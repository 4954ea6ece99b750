#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstring>
#include <string>

#include "heckelab.h"

using nlohmann::ordered_json;

namespace {
struct OwnedString {
    char* s = nullptr;
    ~OwnedString() { hl_string_free(s); }
    std::string str() const { return s ? std::string(s) : std::string(); }
};
}  // namespace

TEST_CASE("poly handles: parse, arithmetic, exact division") {
    hl_poly *a = nullptr, *b = nullptr, *prod = nullptr, *quot = nullptr;
    REQUIRE(hl_poly_from_json(R"({"1": "1/1", "x0": "1/1"})", &a) == HL_OK);
    REQUIRE(hl_poly_from_json(R"({"1": "-1/1", "x0": "1/1"})", &b) == HL_OK);
    REQUIRE(hl_poly_binop(a, b, '*', &prod) == HL_OK);

    OwnedString js;
    REQUIRE(hl_poly_to_json(prod, &js.s) == HL_OK);
    CHECK(js.str() == R"({"1":"-1/1","x0^2":"1/1"})");

    // (x0^2 - 1) / (x0 - 1) = x0 + 1
    REQUIRE(hl_poly_exact_divide(prod, b, &quot) == HL_OK);
    CHECK(hl_poly_equal(quot, a) == 1);

    // u * u = p
    hl_poly *u = nullptr, *uu = nullptr, *p = nullptr;
    REQUIRE(hl_poly_from_json(R"({"u": "1/1"})", &u) == HL_OK);
    REQUIRE(hl_poly_binop(u, u, '*', &uu) == HL_OK);
    REQUIRE(hl_poly_from_json(R"({"p": "1/1"})", &p) == HL_OK);
    CHECK(hl_poly_equal(uu, p) == 1);

    // non-divisible pair reports HL_NOT_DIVISIBLE with a message
    hl_poly* bad = nullptr;
    CHECK(hl_poly_exact_divide(a, prod, &bad) == HL_NOT_DIVISIBLE);
    CHECK(std::strlen(hl_last_error()) > 0);

    hl_poly_free(a);
    hl_poly_free(b);
    hl_poly_free(prod);
    hl_poly_free(quot);
    hl_poly_free(u);
    hl_poly_free(uu);
    hl_poly_free(p);

    hl_poly* nope = nullptr;
    CHECK(hl_poly_from_json("{\"q0\": \"1/1\"}", &nope) == HL_PARSE_ERROR);
}

TEST_CASE("rankin runner emits a pass report at genus 1") {
    OwnedString rep;
    REQUIRE(hl_run_rankin(1, 1, 1, 8, &rep.s) == HL_OK);
    ordered_json j = ordered_json::parse(rep.str());
    CHECK(j["status"] == "pass");
    CHECK(j["details"]["partial_fraction_count"] == 4);
    CHECK(j["details"]["series_oracle"]["pass"] == true);
    CHECK(j["details"]["operator_form"]["pass"] == true);
    CHECK(j["details"]["functional_equation"]["pass"] == true);
    CHECK(j["details"]["reconstruction"]["coefficients_integral"] == true);
    // byte-deterministic output
    OwnedString rep2;
    REQUIRE(hl_run_rankin(1, 1, 1, 8, &rep2.s) == HL_OK);
    CHECK(rep.str() == rep2.str());

    CHECK(hl_run_rankin(5, 0, 0, 8, &rep2.s) == HL_INVALID_INPUT);
}

TEST_CASE("euler runner") {
    OwnedString rep;
    REQUIRE(hl_run_euler("spinor", 2, 8, 1, 0, &rep.s) == HL_OK);
    ordered_json j = ordered_json::parse(rep.str());
    CHECK(j["details"]["degree"] == 4);
    CHECK(j["details"]["normalization"]["pass"] == true);

    // specializing the symbolic prime
    OwnedString specialized;
    REQUIRE(hl_run_euler("spinor", 2, 8, 1, 5, &specialized.s) == HL_OK);
    ordered_json sj = ordered_json::parse(specialized.str());
    CHECK(sj["details"]["specialized_p"] == 5);
    CHECK(sj["details"]["factor"].dump().find("\"p") == std::string::npos);

    OwnedString rep2;
    CHECK(hl_run_euler("nonsense", 2, 0, 0, 0, &rep2.s) == HL_INVALID_INPUT);
}

TEST_CASE("gamma runner rejects bad weights") {
    long w[1] = {12};
    OwnedString rep;
    REQUIRE(hl_run_gamma("spin3", w, 1, 1, &rep.s) == HL_OK);
    ordered_json j = ordered_json::parse(rep.str());
    CHECK(j["details"]["critical_values"].size() == 8);
    CHECK(j["details"]["numeric"]["duplication"]["pass"] == true);

    long bad[2] = {6, 10};  // k <= l + 1
    OwnedString rep2;
    CHECK(hl_run_gamma("tensor-g2", bad, 2, 0, &rep2.s) == HL_INVALID_INPUT);
}

TEST_CASE("newton runner produces csv and svg") {
    OwnedString rep, csv, svg;
    const char* input = R"({"points": [[0, "0/1"], [1, "0/1"], [2, "1/1"], [3, "2/1"], [4, "4/1"]]})";
    REQUIRE(hl_run_newton(input, &rep.s, &csv.s, &svg.s) == HL_OK);
    CHECK(csv.str().rfind("degree,valuation\n", 0) == 0);
    CHECK(svg.str().find("<polyline") != std::string::npos);
    ordered_json j = ordered_json::parse(rep.str());
    CHECK(j["details"]["polygon"]["slopes_integral"] == true);
    CHECK(j["details"]["polygon"]["height"] == "4/1");

    OwnedString rep2;
    CHECK(hl_run_newton("{\"nothing\": 1}", &rep2.s, nullptr, nullptr) == HL_PARSE_ERROR);
}

TEST_CASE("dirichlet runner") {
    OwnedString rep;
    const char* factors = R"({"2": {"1": "1/1", "X": "-1/1"}})";
    REQUIRE(hl_run_dirichlet(factors, 16, &rep.s) == HL_OK);
    ordered_json j = ordered_json::parse(rep.str());
    CHECK(j["details"]["coefficients"]["8"] == ordered_json::parse(R"({"1": "1/1"})"));
    CHECK(j["details"]["multiplicative"] == true);
}

TEST_CASE("lift and family runners") {
    OwnedString rep;
    REQUIRE(hl_run_lift("ikeda-standard", 2, 10, &rep.s) == HL_OK);
    ordered_json j = ordered_json::parse(rep.str());
    CHECK(j["details"]["standard_factorization"]["pass"] == true);

    long ws[2] = {2, 6};
    OwnedString frep;
    REQUIRE(hl_run_family(5, ws, 2, 12, 1, &frep.s) == HL_OK);
    ordered_json fj = ordered_json::parse(frep.str());
    CHECK(fj["details"]["slopes"]["2"] == "0/1");
    CHECK(fj["details"]["kummer"][0]["pass"] == true);

    // congruence hypothesis violation surfaces as its own status
    long bad[2] = {2, 3};
    OwnedString brep;
    CHECK(hl_run_family(5, bad, 2, 12, 1, &brep.s) == HL_CONGRUENCE_HYPOTHESIS_FAILS);
}

TEST_CASE("version and last error") {
    CHECK(std::string(hl_version()).find("heckelab") != std::string::npos);
    hl_poly* out = nullptr;
    CHECK(hl_poly_from_json("not json", &out) == HL_PARSE_ERROR);
    CHECK(std::strlen(hl_last_error()) > 0);
}
