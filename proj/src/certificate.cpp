#include "ipmod/certificate.hpp"

#include <map>

#include <json.hpp>

#include "ipmod/errors.hpp"

namespace ipmod {

using nlohmann::json;

namespace {

const char* kNonvanishing = "K nontrivial, so I(S^3_{1/n}(K)) != 0";

// Lexicographic weight: offset first, then minus the number of strict steps.
struct Weight {
    Rational offset{0};
    int strict = 0;

    friend Weight operator+(const Weight& a, const Weight& b) { return {a.offset + b.offset, a.strict + b.strict}; }
    friend bool operator<(const Weight& a, const Weight& b) {
        return a.offset != b.offset ? a.offset < b.offset : a.strict < b.strict;
    }
};

struct Edge {
    std::size_t from;
    std::size_t to;
    Weight weight;
    std::size_t step;
};

Inequality bound_step(const CertificateStep& s) {
    Inequality q;
    q.lhs = s.target;
    q.rhs = s.source;
    q.cite = s.cite;
    if (s.kind == CertificateStep::Kind::identify) {
        if (!s.maps.empty()) {
            throw validation_error("identify step " + s.target + " = " + s.source + " must not carry maps");
        }
        q.relation = Relation::eq;
        return q;
    }
    if (s.maps.empty() || s.maps.size() > 2) {
        throw validation_error("morphism step " + s.source + " -> " + s.target + " needs one or two maps");
    }
    if (s.injectivity.empty()) {
        q.missing.emplace_back("injectivity");
    }
    if (s.nonvanishing.empty()) {
        q.missing.emplace_back("nonvanishing");
    }
    q.conditional = !q.missing.empty();
    const bool finite = !s.nonvanishing.empty();
    auto maps = s.maps;
    for (auto& m : maps) {
        m.injective_all_degrees = true;
    }
    const auto b = maps.size() == 1 ? ell_bound_single(maps[0], finite) : ell_bound_pair(maps[0], maps[1], true, finite);
    q.relation = b.relation;
    q.offset = b.offset;
    q.slack = b.slack;
    return q;
}

Relation combine(Relation a, Relation b) {
    if (a == Relation::lt || b == Relation::lt) {
        return Relation::lt;
    }
    if (a == Relation::eq && b == Relation::eq) {
        return Relation::eq;
    }
    return Relation::le;
}

CertificateStep morphism(std::string source, std::string target, std::vector<IPMorphismMeta> maps,
                         std::string injectivity, std::string cite) {
    CertificateStep s;
    s.source = std::move(source);
    s.target = std::move(target);
    s.maps = std::move(maps);
    s.injectivity = std::move(injectivity);
    s.nonvanishing = kNonvanishing;
    s.cite = std::move(cite);
    return s;
}

IPMorphismMeta meta(int degree, Rational level, std::string slack) {
    IPMorphismMeta m;
    m.degree = degree;
    m.level_base = level;
    m.slack.push_back({std::move(slack), true});
    m.injective_all_degrees = true;
    return m;
}

const json& need(const json& obj, const char* key, const std::string& where) {
    const auto it = obj.find(key);
    if (it == obj.end()) {
        throw validation_error(where + ": missing field '" + key + "'");
    }
    return *it;
}

std::string need_string(const json& obj, const char* key, const std::string& where) {
    const auto& v = need(obj, key, where);
    if (!v.is_string()) {
        throw validation_error(where + ": '" + key + "' must be a string");
    }
    return v.get<std::string>();
}

int need_int(const json& obj, const char* key, const std::string& where) {
    const auto& v = need(obj, key, where);
    if (!v.is_number_integer()) {
        throw validation_error(where + ": '" + key + "' must be an integer");
    }
    return v.get<int>();
}

std::string optional_string(const json& obj, const char* key) {
    const auto it = obj.find(key);
    return (it != obj.end() && it->is_string()) ? it->get<std::string>() : std::string();
}

IPMorphismMeta parse_meta(const json& j, const std::string& where) {
    IPMorphismMeta m;
    m.degree = need_int(j, "degree", where);
    try {
        m.level_base = parse_rational(need_string(j, "level", where));
    } catch (const validation_error&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw validation_error(where + ": " + e.what());
    }
    if (const auto it = j.find("slack"); it != j.end()) {
        if (!it->is_array()) {
            throw validation_error(where + ": 'slack' must be an array");
        }
        for (const auto& s : *it) {
            const auto name = need_string(s, "name", where);
            const auto strict = s.find("strict");
            m.slack.push_back({name, strict != s.end() && strict->is_boolean() && strict->get<bool>()});
        }
    }
    return m;
}

void append(std::vector<CertificateStep>& out, std::vector<CertificateStep> more) {
    out.insert(out.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
}

}  // namespace

std::string Inequality::text() const {
    std::string out = "ell(" + lhs + ") " + to_string(relation) + " ell(" + rhs + ")";
    if (offset > 0) {
        out += " + " + to_string(offset);
    } else if (offset < 0) {
        out += " - " + to_string(-offset);
    }
    return out;
}

Certificate certify_chain(const std::string& name, const std::vector<CertificateStep>& steps) {
    Certificate cert;
    cert.name = name;
    for (const auto& s : steps) {
        cert.steps.push_back(bound_step(s));
        cert.conditional = cert.conditional || cert.steps.back().conditional;
    }

    bool chained = !cert.steps.empty();
    for (std::size_t i = 0; i + 1 < cert.steps.size(); ++i) {
        chained = chained && cert.steps[i].lhs == cert.steps[i + 1].rhs;
    }
    if (chained) {
        Inequality total;
        total.lhs = cert.steps.back().lhs;
        total.rhs = cert.steps.front().rhs;
        total.relation = Relation::eq;
        for (const auto& q : cert.steps) {
            total.relation = combine(total.relation, q.relation);
            total.offset += q.offset;
            total.slack.insert(total.slack.end(), q.slack.begin(), q.slack.end());
            total.conditional = total.conditional || q.conditional;
        }
        cert.cumulative = total;
    }

    // Difference constraints x_lhs - x_rhs <= w become edges rhs -> lhs; a negative cycle is infeasible.
    std::map<std::string, std::size_t> node;
    auto id = [&](const std::string& s) { return node.emplace(s, node.size()).first->second; };
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < cert.steps.size(); ++i) {
        const auto& q = cert.steps[i];
        const auto l = id(q.lhs);
        const auto r = id(q.rhs);
        edges.push_back({r, l, {q.offset, q.relation == Relation::lt ? -1 : 0}, i});
        if (q.relation == Relation::eq) {
            edges.push_back({l, r, {-q.offset, 0}, i});
        }
    }
    const auto n = node.size();
    std::vector<Weight> dist(n);
    std::vector<std::size_t> pred(n, edges.size());
    std::size_t touched = n;
    for (std::size_t round = 0; round <= n; ++round) {
        touched = n;
        for (std::size_t e = 0; e < edges.size(); ++e) {
            const auto& edge = edges[e];
            const auto candidate = dist[edge.from] + edge.weight;
            if (candidate < dist[edge.to]) {
                dist[edge.to] = candidate;
                pred[edge.to] = e;
                touched = edge.to;
            }
        }
        if (touched == n) {
            break;
        }
    }
    if (touched != n) {
        auto v = touched;
        for (std::size_t i = 0; i < n; ++i) {
            v = edges[pred[v]].from;
        }
        std::vector<std::size_t> cycle;
        auto u = v;
        do {
            cycle.push_back(edges[pred[u]].step);
            u = edges[pred[u]].from;
        } while (u != v);
        std::reverse(cycle.begin(), cycle.end());
        bool finite = false;
        for (auto i : cycle) {
            const auto& q = cert.steps[i];
            cert.cycle_offset += q.offset;
            finite = finite || q.relation == Relation::lt || !steps[i].nonvanishing.empty();
            if (std::find(q.missing.begin(), q.missing.end(), "injectivity") != q.missing.end()) {
                cert.contradiction_conditional = true;
            }
        }
        cert.cycle = std::move(cycle);
        cert.contradiction = finite;
    }
    return cert;
}

std::string surgery_name(const std::string& knot, int m) {
    if (m == 1 || m == -1) {
        return "S^3_{" + std::to_string(m) + "}(" + knot + ")";
    }
    return "S^3_{" + std::string(m < 0 ? "-" : "") + "1/" + std::to_string(m < 0 ? -m : m) + "}(" + knot + ")";
}

std::vector<CertificateStep> pm_one_steps(const std::string& knot) {
    return {morphism(surgery_name(knot, 1), surgery_name(knot, -1), {meta(3, Rational(1, 4), "eta(" + knot + ")")},
                     "one-parameter family map injective", "+1 to -1 surgery map, degree 3, level 1/4 - eta")};
}

std::vector<CertificateStep> ladder_steps(const std::string& knot, int m_from, int m_to) {
    if (m_from > m_to) {
        throw std::invalid_argument("ladder needs m_from <= m_to");
    }
    if (m_from == 0 || m_to == 0) {
        throw std::invalid_argument("ladder endpoints must be nonzero slopes 1/m");
    }
    std::vector<CertificateStep> out;
    for (int hi = m_to; hi > m_from; --hi) {
        if (hi == 0) {
            continue;
        }
        const int lo = hi == 1 ? -1 : hi - 1;
        if (lo < m_from) {
            break;
        }
        if (lo == -1 && hi == 1) {
            append(out, pm_one_steps(knot));
        } else if (hi < 0) {
            const auto w = "eta(W_" + std::to_string(-hi) + ")";
            out.push_back(morphism(surgery_name(knot, hi), surgery_name(knot, lo), {meta(0, Rational(0), w)},
                                   "triangle collapses to a short exact sequence",
                                   "-1-framed handle, degree 0, level -eta"));
        } else {
            const auto w = std::to_string(lo);
            out.push_back(morphism(surgery_name(knot, hi), surgery_name(knot, lo),
                                   {meta(0, Rational(0), "eta(W_" + w + ")"),
                                    meta(2, Rational(1, 4), "eta(W_" + w + ",c)")},
                                   "distance-two triangle collapses to a short exact sequence",
                                   "W + (W,c) pair, offsets -eta and 1/4 - 2/8 - eta"));
        }
    }
    return out;
}

std::vector<CertificateStep> s2xs1_ladder_steps(const std::string& link, int first, int count) {
    std::vector<CertificateStep> out;
    auto name = [&](int n) { return "S_{" + std::to_string(n) + "}(" + link + ")"; };
    for (int n = first; n < first + count; ++n) {
        auto s = morphism(name(n), name(n + 1), {meta(0, Rational(0), "eta(W(" + std::to_string(n) + "))")},
                          "I^w(S^2 x S^1) = 0, so W(n) induces an isomorphism",
                          "surgery cobordism W(n), degree 0, level -eta");
        s.nonvanishing = "I(S_n(L)) != 0";
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<CertificateStep> cyclic_steps(const std::vector<CyclicKnot>& knots) {
    if (knots.empty()) {
        throw std::invalid_argument("cyclic chain needs at least one knot");
    }
    const auto n = knots.size();
    std::vector<CertificateStep> out;
    auto identify = [&](std::size_t i) {
        // S^3_{1/a_i}(K_i) = S^3_{1/b_{i+1}}(K_{i+1})
        const auto& k = knots[i];
        const auto& next = knots[(i + 1) % n];
        CertificateStep s;
        s.kind = CertificateStep::Kind::identify;
        s.target = surgery_name(k.name, k.a);
        s.source = surgery_name(next.name, next.b);
        s.cite = "orientation-preserving diffeomorphism";
        return s;
    };
    for (std::size_t step = 0; step < n; ++step) {
        const auto i = (n - step) % n;
        const auto& k = knots[i];
        if (k.a == 0 || k.b == 0) {
            throw std::invalid_argument("cyclic chain slopes must be nonzero");
        }
        append(out, ladder_steps(k.name, std::min(k.a, k.b), std::max(k.a, k.b)));
        out.push_back(identify((i + n - 1) % n));
    }
    return out;
}

std::pair<std::string, std::vector<CertificateStep>> parse_certificate_spec(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw validation_error(std::string("certificate spec is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw validation_error("certificate spec must be a JSON object");
    }
    const auto name = need_string(doc, "name", "certificate spec");
    const auto& steps = need(doc, "steps", "certificate spec");
    if (!steps.is_array()) {
        throw validation_error("certificate spec: 'steps' must be an array");
    }
    std::vector<CertificateStep> out;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const auto& s = steps[i];
        const auto where = "step #" + std::to_string(i);
        if (!s.is_object()) {
            throw validation_error(where + " must be an object");
        }
        try {
            if (s.contains("builder")) {
                const auto builder = need_string(s, "builder", where);
                if (builder == "pm_one") {
                    append(out, pm_one_steps(need_string(s, "knot", where)));
                } else if (builder == "ladder") {
                    append(out, ladder_steps(need_string(s, "knot", where), need_int(s, "from", where),
                                             need_int(s, "to", where)));
                } else if (builder == "s2xs1_ladder") {
                    append(out, s2xs1_ladder_steps(need_string(s, "link", where), need_int(s, "first", where),
                                                   need_int(s, "count", where)));
                } else if (builder == "cyclic") {
                    std::vector<CyclicKnot> knots;
                    for (const auto& k : need(s, "knots", where)) {
                        knots.push_back({need_string(k, "name", where), need_int(k, "a", where), need_int(k, "b", where)});
                    }
                    append(out, cyclic_steps(knots));
                } else {
                    throw validation_error(where + ": unknown builder '" + builder + "'");
                }
                continue;
            }
        } catch (const validation_error&) {
            throw;
        } catch (const std::invalid_argument& e) {
            throw validation_error(where + ": " + e.what());
        }
        const auto kind = need_string(s, "kind", where);
        CertificateStep step;
        step.cite = optional_string(s, "cite");
        if (kind == "identify") {
            step.kind = CertificateStep::Kind::identify;
            step.target = need_string(s, "lhs", where);
            step.source = need_string(s, "rhs", where);
        } else if (kind == "morphism") {
            step.source = need_string(s, "source", where);
            step.target = need_string(s, "target", where);
            const auto& maps = need(s, "maps", where);
            if (!maps.is_array()) {
                throw validation_error(where + ": 'maps' must be an array");
            }
            for (const auto& m : maps) {
                step.maps.push_back(parse_meta(m, where));
            }
            step.injectivity = optional_string(s, "injectivity");
            step.nonvanishing = optional_string(s, "nonvanishing");
        } else {
            throw validation_error(where + ": unknown kind '" + kind + "'");
        }
        out.push_back(std::move(step));
    }
    return {name, out};
}

}  // namespace ipmod
