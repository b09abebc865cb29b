#include "ipmod/manifold.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ipmod/errors.hpp"

namespace ipmod {

using nlohmann::json;

namespace {

const json& field(const json& obj, const char* key, const std::string& where) {
    const auto it = obj.find(key);
    if (it == obj.end()) {
        throw validation_error(where + ": missing field '" + key + "'");
    }
    return *it;
}

}  // namespace

ManifoldData parse_manifold(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw validation_error(std::string("manifest is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw validation_error("manifest must be a JSON object");
    }
    ManifoldData m;
    const auto& name = field(doc, "name", "manifest");
    if (!name.is_string() || name.get<std::string>().empty()) {
        throw validation_error("manifest: 'name' must be a nonempty string");
    }
    m.name = name.get<std::string>();

    std::vector<FlatGenerator> gens;
    const auto& gens_json = field(doc, "generators", "manifest");
    if (!gens_json.is_array()) {
        throw validation_error("manifest: 'generators' must be an array");
    }
    for (std::size_t i = 0; i < gens_json.size(); ++i) {
        const auto& g = gens_json[i];
        const auto where = "generator #" + std::to_string(i);
        if (!g.is_object()) {
            throw validation_error(where + " must be an object");
        }
        const auto& label = field(g, "label", where);
        const auto& grading = field(g, "grading", where);
        const auto& cs = field(g, "cs", where);
        if (!label.is_string()) {
            throw validation_error(where + ": 'label' must be a string");
        }
        const auto named = "generator '" + label.get<std::string>() + "'";
        if (!grading.is_number_integer()) {
            throw validation_error(named + ": 'grading' must be an integer");
        }
        if (!cs.is_string()) {
            throw validation_error(named + ": 'cs' must be a \"p/q\" string");
        }
        FlatGenerator gen;
        gen.label = label.get<std::string>();
        gen.grading = grading.get<int>();
        try {
            gen.cs = parse_rational(cs.get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw validation_error(named + ": " + e.what());
        }
        gens.push_back(std::move(gen));
    }

    std::vector<std::pair<std::string, std::string>> pairs;
    const auto it = doc.find("boundary");
    if (it != doc.end()) {
        if (!it->is_array()) {
            throw validation_error("manifest: 'boundary' must be an array");
        }
        for (std::size_t i = 0; i < it->size(); ++i) {
            const auto& p = (*it)[i];
            if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string()) {
                throw validation_error("boundary entry #" + std::to_string(i) + " must be [fromLabel, toLabel]");
            }
            pairs.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
        }
    }
    m.complex = FilteredComplex(std::move(gens), std::move(pairs));
    return m;
}

ManifoldData load_manifold(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw validation_error("cannot open manifest " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_manifold(buf.str());
}

std::string dump_manifold(const ManifoldData& m) {
    json doc;
    doc["name"] = m.name;
    doc["generators"] = json::array();
    for (const auto& g : m.complex.generators()) {
        doc["generators"].push_back({{"label", g.label}, {"grading", g.grading}, {"cs", to_string(g.cs)}});
    }
    doc["boundary"] = json::array();
    for (const auto& [from, to] : m.complex.boundary()) {
        doc["boundary"].push_back({from, to});
    }
    return doc.dump(2);
}

IPModule ip_module_of(const ManifoldData& m) { return IPModule(barcode(m.complex)); }

ExtendedRational ell_of(const ManifoldData& m) { return ell(ip_module_of(m)); }

}  // namespace ipmod
