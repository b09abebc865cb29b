#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "ipmod/errors.hpp"
#include "ipmod/manifold.hpp"

using namespace ipmod;

namespace {

std::string error_of(const std::string& text) {
    try {
        parse_manifold(text);
    } catch (const validation_error& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("well-formed manifest") {
    const auto m = parse_manifold(R"({"name": "P", "generators": [
        {"label": "alpha", "grading": 1, "cs": "1/120"},
        {"label": "beta", "grading": 5, "cs": "49/120"}]})");
    CHECK(m.name == "P");
    CHECK(m.complex.size() == 2);
    CHECK(ell_of(m) == ExtendedRational(Rational(-13, 60)));
}

TEST_CASE("syntax errors carry line and column") {
    const auto e = error_of("{\n  \"name\": \"x\",\n  \"generators\": [,]\n}");
    CHECK(e.find("line 3") != std::string::npos);
    CHECK(e.find("column") != std::string::npos);
}

TEST_CASE("semantic errors name the offending item") {
    CHECK(error_of(R"({"generators": []})").find("name") != std::string::npos);
    CHECK(error_of(R"({"name": "x", "generators": [{"label": "a", "grading": "1", "cs": "0/1"}]})").find("'a'") !=
          std::string::npos);
    CHECK(error_of(R"({"name": "x", "generators": [{"label": "a", "grading": 1, "cs": "2/4"}]})").find("'a'") !=
          std::string::npos);
    CHECK_FALSE(error_of(R"({"name": "x", "generators": [{"label": "a", "grading": 1, "cs": "1/-2"}]})").empty());
    CHECK_FALSE(error_of(R"({"name": "x", "generators": [{"label": "a", "grading": 1, "cs": 0.5}]})").empty());
    CHECK(error_of(R"({"name": "x", "generators": [{"label": "a", "grading": 1, "cs": "1/2"}],
                       "boundary": [["a", "zz"]]})")
              .find("zz") != std::string::npos);
    CHECK_FALSE(error_of(R"({"name": "x", "generators": [], "boundary": [["a"]]})").empty());
    CHECK_FALSE(error_of("[]").empty());
}

TEST_CASE("dump and parse round trip") {
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 50; ++trial) {
        const ManifoldData m{"random " + std::to_string(trial), gen::filtered_complex(rng, 12)};
        const auto back = parse_manifold(dump_manifold(m));
        CHECK(back.name == m.name);
        CHECK(back.complex.boundary() == m.complex.boundary());
        CHECK(barcode(back.complex) == barcode(m.complex));
        CHECK(dump_manifold(back) == dump_manifold(m));
    }
}

TEST_CASE("missing files are validation errors") {
    CHECK_THROWS_AS(load_manifold("/nonexistent/manifest.json"), validation_error);
}
