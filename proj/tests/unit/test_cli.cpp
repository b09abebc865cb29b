#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "ipmod/errors.hpp"

using namespace ipmod::cli;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "ipmod");
    std::vector<const char*> argv;
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(IPMOD_DATA_DIR) + "/" + name; }

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

std::string temp_file(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << text;
    return path.string();
}

}  // namespace

TEST_CASE("digest and window helpers") {
    CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
    const auto w = parse_window("-3..4");
    CHECK(w.from == -3);
    CHECK(w.to == 4);
    CHECK_THROWS_AS(parse_window("4..3"), ipmod::validation_error);
    CHECK_THROWS_AS(parse_window("4"), ipmod::validation_error);
}

TEST_CASE("ell of the Poincare sphere") {
    const auto r = invoke({"ell", data("poincare.json")});
    CHECK(r.code == ok);
    CHECK(contains(r.out, "ell = -13/60"));
    CHECK(contains(r.out, "fnv1a64"));
}

TEST_CASE("ell of the empty manifest") {
    const auto r = invoke({"ell", data("empty.json")});
    CHECK(r.code == ok);
    CHECK(contains(r.out, "(zero module)"));
}

TEST_CASE("json mode is parseable and deterministic") {
    const auto a = invoke({"--json", "kappa", data("poincare.json")});
    const auto b = invoke({"kappa", data("poincare.json"), "--json"});
    CHECK(a.code == ok);
    CHECK(a.out == b.out);
    const auto j = nlohmann::json::parse(a.out);
    CHECK(j["command"] == "kappa");
    CHECK(j["exit_code"] == 0);
    CHECK(j["inputs"].size() == 1);
    CHECK(j["results"].contains("kappa"));
}

TEST_CASE("barcode window") {
    const auto r = invoke({"barcode", data("toy.json"), "--window", "0..1"});
    CHECK(r.code == ok);
    CHECK(contains(r.out, "degree 0"));
    CHECK(contains(r.out, "degree 1"));
    CHECK_FALSE(contains(r.out, "degree 2"));
    CHECK(invoke({"barcode", data("toy.json"), "--window", "2..1"}).code == validation_failure);
}

TEST_CASE("triangle check") {
    CHECK(contains(invoke({"triangle-check", data("zero_c0_triangle.json")}).out, "verdict: exact triangle"));
    const auto broken = temp_file("ipmod_broken_triangle.json", R"({
        "period": 4,
        "complexes": {"-1": {"dims": {"0": 1}}, "0": {}, "1": {"dims": {"0": 1}}},
        "f": {"-1": {"degree": 0}, "0": {"degree": 0}, "1": {"degree": -1}},
        "g": {"1": {"degree": 0}}})");
    const auto r = invoke({"triangle-check", broken});
    CHECK(r.code == verification_failure);
    CHECK(contains(r.out, "refused"));
    std::filesystem::remove(broken);
}

TEST_CASE("surgery ranks") {
    const auto r = invoke({"surgery-ranks", "-n", "-2", "--base", "0,1,0,0,0,1,0,0"});
    CHECK(r.code == ok);
    CHECK(contains(r.out, "(0, 1, 0, 1, 0, 1, 0, 1)"));
    CHECK(invoke({"surgery-ranks", "-n", "0", "--base", "0,1,0,0,0,1,0,0"}).code == validation_failure);
    CHECK(invoke({"surgery-ranks", "-n", "2", "--base", "0,1"}).code == ok);
}

TEST_CASE("alexander") {
    const auto r = invoke({"alexander", "--search-bound", "4"});
    CHECK(r.code == ok);
    CHECK(contains(r.out, "Delta_K = 1 forced"));
}

TEST_CASE("certify") {
    const auto pm = invoke({"certify", data("pm_one.json")});
    CHECK(pm.code == ok);
    CHECK(contains(pm.out, "gap >= 1/8 (strict)"));
    const auto cyc = invoke({"certify", data("cyclic.json")});
    CHECK(contains(cyc.out, "contradiction: ell("));
    CHECK(contains(cyc.out, "- 3/8"));
}

TEST_CASE("input errors exit with 1") {
    CHECK(invoke({}).code == validation_failure);
    CHECK(invoke({"nope"}).code == validation_failure);
    CHECK(invoke({"ell", "/nonexistent.json"}).code == validation_failure);
    const auto bad = temp_file("ipmod_bad_manifest.json", "{\"name\": \"x\",\n \"generators\": [}");
    const auto r = invoke({"ell", bad});
    CHECK(r.code == validation_failure);
    CHECK(contains(r.err, "line 2"));
    std::filesystem::remove(bad);
}
