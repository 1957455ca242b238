#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include "gcdval.h"

namespace {

struct PolyHandle {
    gcdval_poly* p = nullptr;
    explicit PolyHandle(const char* text) {
        REQUIRE(gcdval_poly_parse(text, &p) == GCDVAL_OK);
    }
    ~PolyHandle() { gcdval_poly_free(p); }
};

std::string formatted(const gcdval_poly* f) {
    char* out = nullptr;
    REQUIRE(gcdval_poly_format(f, &out) == GCDVAL_OK);
    std::string s(out);
    gcdval_string_free(out);
    return s;
}

}  // namespace

TEST_CASE("version") {
    CHECK(std::string(gcdval_version()) == "1.0.0");
}

TEST_CASE("polynomial round trip") {
    PolyHandle f("2+(x*(x-1))^2");
    CHECK(formatted(f.p) == "x^4 - 2*x^3 + x^2 + 2");

    long deg = -2;
    CHECK(gcdval_poly_degree(f.p, &deg) == GCDVAL_OK);
    CHECK(deg == 4);

    int monic = 0;
    CHECK(gcdval_poly_is_monic(f.p, &monic) == GCDVAL_OK);
    CHECK(monic == 1);

    char* value = nullptr;
    CHECK(gcdval_poly_evaluate(f.p, "-2", &value) == GCDVAL_OK);
    CHECK(std::string(value) == "38");  // 16 + 16 + 4 + 2
    gcdval_string_free(value);

    gcdval_poly* shifted = nullptr;
    CHECK(gcdval_poly_shift(f.p, "1", &shifted) == GCDVAL_OK);
    CHECK(formatted(shifted) == "x^4 + 2*x^3 + x^2 + 2");
    gcdval_poly_free(shifted);

    PolyHandle a("x-1");
    PolyHandle b("x+1");
    gcdval_poly* prod = nullptr;
    CHECK(gcdval_poly_multiply(a.p, b.p, &prod) == GCDVAL_OK);
    CHECK(formatted(prod) == "x^2 - 1");
    gcdval_poly_free(prod);
}

TEST_CASE("parse errors set the thread-local message") {
    gcdval_poly* out = nullptr;
    CHECK(gcdval_poly_parse("x +", &out) == GCDVAL_EPARSE);
    CHECK(out == nullptr);
    CHECK(std::strlen(gcdval_last_error()) > 0);
    CHECK(gcdval_poly_parse("2x", &out) == GCDVAL_EPARSE);
}

TEST_CASE("null arguments are rejected") {
    gcdval_poly* out = nullptr;
    CHECK(gcdval_poly_parse(nullptr, &out) == GCDVAL_EBADARG);
    CHECK(gcdval_poly_parse("x", nullptr) == GCDVAL_EBADARG);
    CHECK(gcdval_poly_format(nullptr, nullptr) == GCDVAL_EBADARG);
    CHECK(gcdval_resultant(nullptr, nullptr, nullptr) == GCDVAL_EBADARG);
    char* json = nullptr;
    CHECK(gcdval_analyze_json("x", nullptr, 2, &json) == GCDVAL_EBADARG);
}

TEST_CASE("resultant and error mapping") {
    PolyHandle f("x^2+1");
    PolyHandle g("x^2-1");
    char* r = nullptr;
    CHECK(gcdval_resultant(f.p, g.p, &r) == GCDVAL_OK);
    CHECK(std::string(r) == "4");
    gcdval_string_free(r);

    PolyHandle nonmonic("2*x+1");
    CHECK(gcdval_resultant(nonmonic.p, g.p, &r) == GCDVAL_ENOTMONIC);

    char* json = nullptr;
    CHECK(gcdval_analyze_json("x", "x", 2, &json) == GCDVAL_EZERORESULTANT);
    CHECK(gcdval_analyze_json("x", "x-1", 9, &json) == GCDVAL_ENOTPRIME);
    CHECK(gcdval_analyze_json("x", "x-1", 2, &json) == GCDVAL_OK);
    gcdval_string_free(json);
}

TEST_CASE("number-theory helpers") {
    int finite = -1;
    unsigned long value = 99;
    CHECK(gcdval_vp("12", 2, &finite, &value) == GCDVAL_OK);
    CHECK(finite == 1);
    CHECK(value == 2);
    CHECK(gcdval_vp("0", 5, &finite, &value) == GCDVAL_OK);
    CHECK(finite == 0);
    CHECK(gcdval_vp("12", 6, &finite, &value) == GCDVAL_ENOTPRIME);
    CHECK(gcdval_vp("twelve", 2, &finite, &value) == GCDVAL_EBADARG);

    unsigned long out = 0;
    CHECK(gcdval_alpha(4, 2, &out) == GCDVAL_OK);
    CHECK(out == 3);
    CHECK(gcdval_beta(3, 2, &out) == GCDVAL_OK);
    CHECK(out == 4);
    CHECK(gcdval_big_b(3, 2, &out) == GCDVAL_OK);
    CHECK(out == 10);

    long long bound = 0;
    unsigned long t = 99;
    CHECK(gcdval_lb_general(2, 2, &bound, &t) == GCDVAL_OK);
    CHECK(bound == 4);
    CHECK(t == 0);
    CHECK(gcdval_lb_small(3, 2, &bound) == GCDVAL_OK);
    CHECK(bound == 10);
    CHECK(gcdval_lb_small(2, 3, &bound) == GCDVAL_EUNSUPPORTED);
}

TEST_CASE("analyze json payload") {
    char* json = nullptr;
    REQUIRE(gcdval_analyze_json("x^2+1", "x^2-1", 2, &json) == GCDVAL_OK);
    std::string doc(json);
    gcdval_string_free(json);
    CHECK(doc.find("\"tool\": \"gcdval\"") != std::string::npos);
    CHECK(doc.find("\"command\": \"analyze\"") != std::string::npos);
    CHECK(doc.find("\"resultant\": \"4\"") != std::string::npos);
    CHECK(doc.find("\"attained\": [") != std::string::npos);
    CHECK(doc.back() == '\n');

    char* again = nullptr;
    REQUIRE(gcdval_analyze_json("x^2+1", "x^2-1", 2, &again) == GCDVAL_OK);
    CHECK(doc == std::string(again));
    gcdval_string_free(again);
}

TEST_CASE("all-primes json payload") {
    char* json = nullptr;
    REQUIRE(gcdval_analyze_all_primes_json("x", "x-6", &json) == GCDVAL_OK);
    std::string doc(json);
    gcdval_string_free(json);
    CHECK(doc.find("\"gcd_value_range\"") != std::string::npos);
    CHECK(doc.find("\"6\"") != std::string::npos);
}

TEST_CASE("construct json payload") {
    int certified = 0;
    char* json = nullptr;
    REQUIRE(gcdval_construct_json("large", 2, 1, 0, &certified, &json) ==
            GCDVAL_OK);
    std::string doc(json);
    gcdval_string_free(json);
    CHECK(certified == 1);
    CHECK(doc.find("x^4 - 2*x^3 + x^2 + 2") != std::string::npos);

    CHECK(gcdval_construct_json("small", 2, 2, 4, &certified, &json) ==
          GCDVAL_EUNSUPPORTED);
    CHECK(gcdval_construct_json("medium", 2, 1, 0, &certified, &json) ==
          GCDVAL_EBADARG);
}

TEST_CASE("verify json payload") {
    int all_passed = 0;
    char* json = nullptr;
    REQUIRE(gcdval_verify_json(1, 5, 2, 3, nullptr, &all_passed, &json) ==
            GCDVAL_OK);
    std::string doc(json);
    gcdval_string_free(json);
    CHECK(all_passed == 1);
    CHECK(doc.find("\"first_failure\": null") != std::string::npos);
    CHECK(gcdval_verify_json(1, 0, 2, 3, nullptr, &all_passed, &json) ==
          GCDVAL_EBADARG);
}

TEST_CASE("tables json payload") {
    char* json = nullptr;
    REQUIRE(gcdval_tables_json(2, 3, &json) == GCDVAL_OK);
    std::string doc(json);
    gcdval_string_free(json);
    CHECK(doc.find("\"beta\"") != std::string::npos);
    CHECK(doc.find("[\n      2,\n      4,\n      4\n    ]") !=
          std::string::npos);
    CHECK(gcdval_tables_json(4, 3, &json) == GCDVAL_ENOTPRIME);
}

TEST_CASE("kempner json payload") {
    int match = 0;
    char* json = nullptr;
    REQUIRE(gcdval_kempner_json(2, 2, -1, &match, &json) == GCDVAL_OK);
    std::string doc(json);
    gcdval_string_free(json);
    CHECK(match == 1);
    CHECK(doc.find("\"count\": \"64\"") != std::string::npos);

    REQUIRE(gcdval_kempner_json(2, 1, 2, &match, &json) == GCDVAL_OK);
    doc = json;
    gcdval_string_free(json);
    CHECK(match == 1);
    CHECK(doc.find("\"count\": \"8\"") != std::string::npos);

    CHECK(gcdval_kempner_json(2, 5, -1, &match, &json) == GCDVAL_EGUARD);
    CHECK(gcdval_kempner_json(2, 2, 1, &match, &json) == GCDVAL_EUNSUPPORTED);
}
