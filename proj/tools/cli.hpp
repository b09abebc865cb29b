#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace ipmod::cli {

enum ExitCode : int { ok = 0, validation_failure = 1, verification_failure = 2 };

struct InputDigest {
    std::string path;
    std::string fnv1a64;
};

struct RunReport {
    std::string command;
    std::vector<InputDigest> inputs;
    nlohmann::ordered_json results = nlohmann::ordered_json::object();
    std::vector<std::string> lines;
    std::vector<std::string> citations;
    int exit_code = ok;

    [[nodiscard]] std::string render(bool json_mode) const;
};

struct Window {
    int from = 0;
    int to = 7;
};

/// "a..b" with a <= b.
Window parse_window(const std::string& text);

std::uint64_t fnv1a64(const std::string& bytes);

RunReport cmd_ell(const std::string& manifest, Window window);
RunReport cmd_kappa(const std::string& manifest, Window window);
RunReport cmd_barcode(const std::string& manifest, Window window);
RunReport cmd_triangle(const std::string& path);
RunReport cmd_surgery_ranks(int n, const std::vector<std::size_t>& base);
RunReport cmd_alexander(long long search_bound);
RunReport cmd_certify(const std::string& path);

/// Parses arguments, runs one subcommand, prints its report. Returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ipmod::cli
