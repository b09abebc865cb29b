#include "cli.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "ipmod/alexander.hpp"
#include "ipmod/certificate.hpp"
#include "ipmod/errors.hpp"
#include "ipmod/manifold.hpp"
#include "ipmod/triangle.hpp"

namespace ipmod::cli {

using nlohmann::ordered_json;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw validation_error("cannot open " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

InputDigest digest(const std::string& path, const std::string& bytes) {
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << fnv1a64(bytes);
    return {path, os.str()};
}

ManifoldData load(RunReport& r, const std::string& path) {
    const auto text = read_file(path);
    r.inputs.push_back(digest(path, text));
    try {
        return parse_manifold(text);
    } catch (const validation_error& e) {
        throw validation_error(path + ": " + e.what());
    }
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        out += (i ? sep : "") + parts[i];
    }
    return out;
}

void kappa_table(RunReport& r, const IPModule& m, Window w) {
    ordered_json table = ordered_json::object();
    for (int d = w.from; d <= w.to; ++d) {
        const auto k = to_string(kappa(m, d));
        table[std::to_string(d)] = k;
        r.lines.push_back("kappa(" + std::to_string(d) + ") = " + k);
    }
    r.results["kappa"] = table;
}

std::string bar_text(const Bar& b) {
    return "[" + to_string(b.birth) + ", " + to_string(b.death) + ")";
}

ordered_json dims_json(const std::map<int, std::size_t>& dims) {
    ordered_json j = ordered_json::object();
    for (const auto& [n, d] : dims) {
        j[std::to_string(n)] = d;
    }
    return j;
}

std::string dims_text(const std::map<int, std::size_t>& dims) {
    std::vector<std::string> parts;
    for (const auto& [n, d] : dims) {
        parts.push_back(std::to_string(n) + ":" + std::to_string(d));
    }
    return parts.empty() ? "0" : join(parts, " ");
}

std::string dim_vector_text(const GradedDimVector& v) {
    std::vector<std::string> parts;
    for (auto d : v.dims) {
        parts.push_back(std::to_string(d));
    }
    return "(" + join(parts, ", ") + ")";
}

}  // namespace

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

Window parse_window(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        throw validation_error("window must look like a..b, got '" + text + "'");
    }
    Window w;
    try {
        std::size_t used_a = 0;
        std::size_t used_b = 0;
        const auto a = text.substr(0, dots);
        const auto b = text.substr(dots + 2);
        w.from = std::stoi(a, &used_a);
        w.to = std::stoi(b, &used_b);
        if (used_a != a.size() || used_b != b.size()) {
            throw std::invalid_argument("trailing characters");
        }
    } catch (const std::exception&) {
        throw validation_error("window must look like a..b with integers, got '" + text + "'");
    }
    if (w.from > w.to) {
        throw validation_error("window start exceeds its end in '" + text + "'");
    }
    return w;
}

std::string RunReport::render(bool json_mode) const {
    if (json_mode) {
        ordered_json j;
        j["command"] = command;
        j["inputs"] = ordered_json::array();
        for (const auto& i : inputs) {
            j["inputs"].push_back({{"path", i.path}, {"fnv1a64", i.fnv1a64}});
        }
        j["results"] = results;
        j["citations"] = citations;
        j["exit_code"] = exit_code;
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "command: " << command << "\n";
    for (const auto& i : inputs) {
        os << "input: " << i.path << " (fnv1a64 " << i.fnv1a64 << ")\n";
    }
    for (const auto& l : lines) {
        os << l << "\n";
    }
    if (!citations.empty()) {
        os << "citations: " << join(citations, ", ") << "\n";
    }
    return os.str();
}

RunReport cmd_kappa(const std::string& manifest, Window window) {
    RunReport r;
    r.command = "kappa";
    const auto m = ip_module_of(load(r, manifest));
    kappa_table(r, m, window);
    r.citations = {"kappa: least infinite-bar birth per degree", "kappa(d + 8) = kappa(d) + 1"};
    return r;
}

RunReport cmd_ell(const std::string& manifest, Window window) {
    RunReport r;
    r.command = "ell";
    const auto data = load(r, manifest);
    const auto m = ip_module_of(data);
    r.results["name"] = data.name;
    r.lines.push_back("manifold: " + data.name);
    kappa_table(r, m, window);
    std::size_t finite = 0;
    std::size_t infinite = 0;
    for (const auto& b : m.barcode().window()) {
        (b.infinite() ? infinite : finite) += 1;
    }
    r.results["finite_bars"] = finite;
    r.results["infinite_bars"] = infinite;
    r.lines.push_back("bars in window: " + std::to_string(finite) + " finite, " + std::to_string(infinite) +
                      " infinite");
    const auto l = ell(m);
    r.results["ell"] = to_string(l);
    r.results["zero_module"] = m.is_zero();
    r.lines.push_back("ell = " + to_string(l) + (m.is_zero() ? " (zero module)" : ""));
    r.citations = {"ell = min over one period of kappa(d) - d/8", "ell is infinite exactly for the zero module"};
    return r;
}

RunReport cmd_barcode(const std::string& manifest, Window window) {
    RunReport r;
    r.command = "barcode";
    const auto m = ip_module_of(load(r, manifest));
    ordered_json bars = ordered_json::object();
    for (int d = window.from; d <= window.to; ++d) {
        ordered_json list = ordered_json::array();
        std::vector<std::string> parts;
        for (const auto& b : m.barcode().bars(d)) {
            list.push_back({{"birth", to_string(b.birth)}, {"death", to_string(b.death)}});
            parts.push_back(bar_text(b));
        }
        bars[std::to_string(d)] = list;
        r.lines.push_back("degree " + std::to_string(d) + ": " + (parts.empty() ? "none" : join(parts, " ")));
    }
    r.results["bars"] = bars;
    r.citations = {"barcode by column reduction in filtration order", "bars shift by (8, 1) under t"};
    return r;
}

RunReport cmd_triangle(const std::string& path) {
    RunReport r;
    r.command = "triangle-check";
    const auto text = read_file(path);
    r.inputs.push_back(digest(path, text));
    TriangleData t;
    try {
        t = parse_triangle(text);
        check_structure(t);
    } catch (const validation_error& e) {
        throw validation_error(path + ": " + e.what());
    }
    const auto v = detect_triangle(t);
    ordered_json ids;
    ids["ok"] = v.identities.ok;
    if (!v.identities.ok) {
        ids["failed"] = v.identities.failed_identity;
        ids["index"] = v.identities.index;
        ids["degree"] = v.identities.degree;
    } else {
        ids["q_homotopic_to_identity"] = v.identities.homotopy_route;
    }
    r.results["identities"] = ids;
    r.citations = {"triangle detection from chain-level identities"};
    if (v.refused) {
        r.results["verdict"] = "refused";
        r.results["reason"] = v.reason;
        r.lines.push_back("refused: " + v.reason);
        r.exit_code = verification_failure;
        return r;
    }
    r.lines.push_back("identities hold; q ~ id via " + v.identities.homotopy_route);
    ordered_json vertices = ordered_json::array();
    for (const auto& vr : v.vertices) {
        const auto i = std::to_string(vr.index);
        const auto prev = std::to_string(vr.index == -1 ? 1 : vr.index - 1);
        vertices.push_back({{"index", vr.index},
                            {"homology", dims_json(vr.homology)},
                            {"cone_homology", dims_json(vr.cone_homology)},
                            {"quasi_isomorphism", vr.quasi_isomorphism}});
        if (vr.quasi_isomorphism) {
            r.lines.push_back("C_" + i + " -> Cone(f_" + prev + "): quasi-isomorphism, H = " + dims_text(vr.homology));
        } else {
            r.lines.push_back("C_" + i + " -> Cone(f_" + prev + "): fails in degree " +
                              std::to_string(vr.failing_degree));
        }
    }
    r.results["vertices"] = vertices;
    ordered_json ranks = ordered_json::object();
    for (int i = -1; i <= 1; ++i) {
        ranks[std::to_string(i)] = dims_json(v.f_ranks[static_cast<std::size_t>(i + 1)]);
        r.lines.push_back("rank (f_" + std::to_string(i) + ")_*: " + dims_text(v.f_ranks[static_cast<std::size_t>(i + 1)]));
    }
    r.results["f_ranks"] = ranks;
    r.results["exact"] = v.exact;
    r.results["detected"] = v.detected;
    r.results["notes"] = v.notes;
    r.results["verdict"] = v.detected && v.exact ? "exact triangle" : "not detected";
    r.lines.push_back(std::string("homology triangle exact: ") + (v.exact ? "yes" : "no"));
    for (const auto& n : v.notes) {
        r.lines.push_back("note: " + n);
    }
    r.lines.push_back(std::string("verdict: ") + (v.detected && v.exact ? "exact triangle" : "not detected"));
    if (!v.detected || !v.exact) {
        r.exit_code = verification_failure;
    }
    return r;
}

RunReport cmd_surgery_ranks(int n, const std::vector<std::size_t>& base) {
    RunReport r;
    r.command = "surgery-ranks";
    if (n == 0) {
        throw validation_error("surgery-ranks needs n != 0");
    }
    const GradedDimVector b(static_cast<int>(base.size()), base);
    const auto out = surgery_ranks(n, b);
    r.results["n"] = n;
    r.results["base"] = base;
    r.results["ranks"] = out.dims;
    r.results["total"] = out.total();
    r.lines.push_back("base: " + dim_vector_text(b));
    r.lines.push_back("n = " + std::to_string(n) + ": " + dim_vector_text(out));
    const int count = n > 0 ? n : -n;
    const int step = n > 0 ? 2 : -2;
    std::vector<std::string> shifts;
    for (int i = 0; i < count; ++i) {
        const int s = i * step;
        shifts.push_back(s == 0 ? "base" : "base shifted by " + std::to_string(-s));
    }
    r.results["summands"] = shifts;
    r.lines.push_back("summands: " + join(shifts, " + "));
    r.lines.push_back("total: " + std::to_string(out.total()) + " = " + std::to_string(count) + " x " +
                      std::to_string(b.total()));
    r.citations = {"surgery rank formula: |n| grading-shifted copies"};
    return r;
}

RunReport cmd_alexander(long long search_bound) {
    RunReport r;
    r.command = "alexander";
    const auto s = cosmetic_solve();
    r.results["second_derivative"] = s.second_derivative.to_string();
    r.results["b"] = s.b_in_a.to_string();
    r.results["value_at_one"] = s.value_at_one.to_string();
    r.lines.push_back("Delta''(1) = " + s.second_derivative.to_string() + " = 0, so b = " + s.b_in_a.to_string());
    r.lines.push_back("Delta(1) = " + s.value_at_one.to_string() + " = +-1");
    ordered_json branches = ordered_json::array();
    for (const auto& br : s.branches) {
        const auto sign = std::string(br.sign > 0 ? "+1" : "-1");
        branches.push_back({{"sign", br.sign},
                            {"c", br.c_in_a.to_string()},
                            {"cover_second_derivative", br.cover_second_derivative.to_string()},
                            {"solution", {br.solution.a, br.solution.b, br.solution.c}}});
        r.lines.push_back("Delta(1) = " + sign + ": c = " + br.c_in_a.to_string() + ", cover Delta''(1) = " +
                          br.cover_second_derivative.to_string() + " = 0, so (a, b, c) = (" +
                          std::to_string(br.solution.a) + ", " + std::to_string(br.solution.b) + ", " +
                          std::to_string(br.solution.c) + ")");
    }
    r.results["branches"] = branches;
    r.results["normalized"] = {s.normalized.a, s.normalized.b, s.normalized.c};
    if (search_bound > 0) {
        const auto found = cosmetic_search(search_bound);
        ordered_json list = ordered_json::array();
        for (const auto& g : found) {
            list.push_back({g.a, g.b, g.c});
        }
        r.results["search_bound"] = search_bound;
        r.results["search"] = list;
        r.lines.push_back("exhaustive search |a|, |b|, |c| <= " + std::to_string(search_bound) + ": " +
                          std::to_string(found.size()) + " solutions, all with a = b = 0");
        if (found != s.raw) {
            r.exit_code = verification_failure;
            r.lines.push_back("search disagrees with the symbolic solution");
        }
    }
    r.results["conclusion"] = "Delta_K = 1 forced";
    r.lines.push_back("Delta_K = 1 forced");
    r.citations = {"genus-two symmetric Alexander template", "Delta''(1) = 0 cosmetic obstruction",
                   "branched double cover polynomial"};
    return r;
}

RunReport cmd_certify(const std::string& path) {
    RunReport r;
    r.command = "certify";
    const auto text = read_file(path);
    r.inputs.push_back(digest(path, text));
    std::pair<std::string, std::vector<CertificateStep>> spec;
    try {
        spec = parse_certificate_spec(text);
    } catch (const validation_error& e) {
        throw validation_error(path + ": " + e.what());
    }
    const auto c = certify_chain(spec.first, spec.second);
    r.results["name"] = c.name;
    r.lines.push_back("certificate: " + c.name);
    ordered_json steps = ordered_json::array();
    std::size_t strict = 0;
    for (const auto& q : c.steps) {
        const bool is_strict = q.relation == Relation::lt;
        strict += is_strict ? 1 : 0;
        ordered_json s = {{"inequality", q.text()},
                          {"strict", is_strict},
                          {"offset", to_string(q.offset)},
                          {"conditional", q.conditional}};
        if (!q.missing.empty()) {
            s["missing"] = q.missing;
        }
        if (!q.cite.empty()) {
            s["cite"] = q.cite;
        }
        steps.push_back(s);
        r.lines.push_back("  " + q.text() + (is_strict ? " (strict)" : "") +
                          (q.conditional ? " [conditional: missing " + join(q.missing, ", ") + "]" : ""));
    }
    r.results["steps"] = steps;
    r.results["strict_steps"] = strict;
    r.results["conditional"] = c.conditional;
    if (c.cumulative) {
        const auto& q = *c.cumulative;
        const bool is_strict = q.relation == Relation::lt;
        r.results["cumulative"] = q.text();
        r.lines.push_back("cumulative: " + q.text());
        if (q.offset < 0) {
            const auto gap = to_string(Rational(-q.offset));
            r.results["gap"] = gap;
            r.results["gap_strict"] = is_strict;
            r.lines.push_back("gap >= " + gap + (is_strict ? " (strict)" : ""));
        }
    }
    r.results["contradiction"] = c.contradiction;
    if (c.contradiction) {
        std::vector<std::string> idx;
        for (auto i : c.cycle) {
            idx.push_back(std::to_string(i));
        }
        r.results["cycle"] = c.cycle;
        r.results["cycle_offset"] = to_string(c.cycle_offset);
        r.results["contradiction_conditional"] = c.contradiction_conditional;
        const auto& x = c.steps[c.cycle.front()].rhs;
        r.lines.push_back("contradiction: ell(" + x + ") < ell(" + x + ") - " + to_string(Rational(-c.cycle_offset)) +
                          " around steps " + join(idx, ", ") + ", so the nontrivial-knot branch is impossible" +
                          " and all knots are unknotted" + (c.contradiction_conditional ? " [conditional]" : ""));
    } else {
        r.lines.push_back("no contradiction");
    }
    r.citations = {"ell inequalities from IP-morphisms of degree D and level L",
                   "strictness from positive instanton energy slack"};
    return r;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Filtered instanton persistence toolkit"};
    app.require_subcommand(1);
    bool json_mode = false;
    app.add_flag("--json", json_mode, "Machine-readable output");

    std::string manifest;
    std::string window_text = "0..7";
    auto add_manifest = [&](const char* name, const char* help) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("manifest", manifest, "Manifest JSON file")->required();
        sub->add_option("--window", window_text, "Degree window a..b");
        sub->add_flag("--json", json_mode, "Machine-readable output");
        return sub;
    };
    auto* ell_cmd = add_manifest("ell", "kappa table and ell of a manifest");
    auto* kappa_cmd = add_manifest("kappa", "kappa table of a manifest");
    auto* barcode_cmd = add_manifest("barcode", "Barcode of a manifest");

    std::string triangle_path;
    auto* triangle_cmd = app.add_subcommand("triangle-check", "Verify triangle identities and detect the triangle");
    triangle_cmd->add_option("file", triangle_path, "Triangle JSON file")->required();
    triangle_cmd->add_flag("--json", json_mode, "Machine-readable output");

    int n = 0;
    std::vector<std::size_t> base;
    auto* ranks_cmd = app.add_subcommand("surgery-ranks", "Graded ranks after 1/n surgery");
    ranks_cmd->add_option("-n,--n", n, "Surgery parameter n != 0")->required();
    ranks_cmd->add_option("--base", base, "Base ranks in degrees 0..p-1")->required()->delimiter(',');
    ranks_cmd->add_flag("--json", json_mode, "Machine-readable output");

    long long bound = 50;
    auto* alex_cmd = app.add_subcommand("alexander", "Alexander-polynomial cosmetic surgery pipeline");
    alex_cmd->add_option("--search-bound", bound, "Exhaustive search bound, 0 to skip");
    alex_cmd->add_flag("--json", json_mode, "Machine-readable output");

    std::string spec_path;
    auto* certify_cmd = app.add_subcommand("certify", "Certify a chain of ell inequalities");
    certify_cmd->add_option("spec", spec_path, "Certificate spec JSON file")->required();
    certify_cmd->add_flag("--json", json_mode, "Machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return validation_failure;
    }

    try {
        RunReport r;
        if (ell_cmd->parsed()) {
            r = cmd_ell(manifest, parse_window(window_text));
        } else if (kappa_cmd->parsed()) {
            r = cmd_kappa(manifest, parse_window(window_text));
        } else if (barcode_cmd->parsed()) {
            r = cmd_barcode(manifest, parse_window(window_text));
        } else if (triangle_cmd->parsed()) {
            r = cmd_triangle(triangle_path);
        } else if (ranks_cmd->parsed()) {
            r = cmd_surgery_ranks(n, base);
        } else if (alex_cmd->parsed()) {
            r = cmd_alexander(bound);
        } else {
            r = cmd_certify(spec_path);
        }
        out << r.render(json_mode);
        return r.exit_code;
    } catch (const validation_error& e) {
        err << "validation error: " << e.what() << "\n";
        return validation_failure;
    } catch (const hypothesis_error& e) {
        err << "hypothesis not met: " << e.what() << "\n";
        return verification_failure;
    } catch (const std::invalid_argument& e) {
        err << "invalid input: " << e.what() << "\n";
        return validation_failure;
    }
}

}  // namespace ipmod::cli
