#include "ipmod/cobordism.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <utility>

#include "ipmod/errors.hpp"

namespace ipmod {

namespace {

constexpr std::array<std::pair<Scenario, std::string_view>, 17> kScenarioNames{{
    {Scenario::irreducible_pieces_reducible_limit, "irreducible_pieces_reducible_limit"},
    {Scenario::reducible_unbroken_bplus0, "reducible_unbroken_bplus0"},
    {Scenario::reducible_unbroken_bplus1_rp3, "reducible_unbroken_bplus1_rp3"},
    {Scenario::reducible_unbroken, "reducible_unbroken"},
    {Scenario::reducible_glued_to_cylinders, "reducible_glued_to_cylinders"},
    {Scenario::intermediate_reducible_limit, "intermediate_reducible_limit"},
    {Scenario::intermediate_one_reducible, "intermediate_one_reducible"},
    {Scenario::intermediate_both_reducible, "intermediate_both_reducible"},
    {Scenario::intermediate_split, "intermediate_split"},
    {Scenario::middle_end_s3, "middle_end_s3"},
    {Scenario::middle_end_rp3, "middle_end_rp3"},
    {Scenario::middle_end_reducible_piece, "middle_end_reducible_piece"},
    {Scenario::pentagon_interior, "pentagon_interior"},
    {Scenario::pentagon_s3_face, "pentagon_s3_face"},
    {Scenario::pentagon_intermediate_face, "pentagon_intermediate_face"},
    {Scenario::pentagon_rp3_face, "pentagon_rp3_face"},
    {Scenario::pentagon_s2xs1_face, "pentagon_s2xs1_face"},
}};

int to_int(const Rational& r, const char* what) {
    if (r.denominator() != 1) {
        throw std::invalid_argument(std::string(what) + " " + to_string(r) + " is not an integer");
    }
    return static_cast<int>(r.numerator());
}

IndexBound finish(Scenario s, std::vector<IndexTerm> terms, bool strict_sum = false) {
    IndexBound b;
    b.scenario = s;
    b.terms = std::move(terms);
    b.strict_sum = strict_sum;
    int sum = 0;
    for (const auto& t : b.terms) {
        sum += t.value;
    }
    b.bound = strict_sum ? sum + 1 : sum;
    return b;
}

// Minimal index of a reducible unbroken piece, from the index formula in its two topological branches.
int reducible_piece_bound() {
    const int flat = to_int(asd_index(Rational(0), 0, {}), "index");
    const int rp3 = to_int(asd_index(Rational(0), 1, {FlatLimit::abelian}), "index") + 1;
    return std::min(flat, rp3);
}

}  // namespace

IPMorphismMeta degree_level(const CobordismTopology& t) {
    if (t.b1 != 0 || t.bplus != 0) {
        throw hypothesis_error("degree/level formula needs b1 = b+ = 0, got b1 = " + std::to_string(t.b1) +
                               ", b+ = " + std::to_string(t.bplus));
    }
    IPMorphismMeta m;
    m.degree = to_int(Rational(t.family_dim) - 2 * t.c_squared, "degree");
    m.level_base = -t.c_squared / 4;
    m.slack.push_back({t.slack_name, t.simply_connected});
    return m;
}

Rational energy_relation(const Rational& c_squared, const Rational& cs_from, const Rational& cs_to) {
    return -c_squared / 4 + cs_from - cs_to;
}

int index_additivity(int i_alpha, const Rational& c_squared, int i_alpha_prime) {
    const int shift = to_int(-2 * c_squared, "-2c^2");
    return i_alpha + 3 + (shift - 3) - i_alpha_prime;
}

int stabilizer_dim(FlatLimit kind) {
    switch (kind) {
        case FlatLimit::central:
            return 3;
        case FlatLimit::abelian:
            return 1;
        case FlatLimit::irreducible:
            return 0;
    }
    return 0;
}

Rational asd_index(const Rational& e8, int bplus, const std::vector<FlatLimit>& ends) {
    Rational total = e8 - 3 * (1 + bplus);
    for (auto end : ends) {
        if (end == FlatLimit::irreducible) {
            throw std::invalid_argument("asd_index: middle ends carry only central or abelian flat limits");
        }
        total += Rational(3 - stabilizer_dim(end), 2);
    }
    return total;
}

NReducibleTable reducibles_on_N(const Rational& c_self, int n_from, int n_to) {
    NReducibleTable table;
    const std::vector<FlatLimit> ends{FlatLimit::central, FlatLimit::central, FlatLimit::abelian};
    for (int n = n_from; n <= n_to; ++n) {
        const auto e8 = Rational((2 * n - 1) * (2 * n - 1)) * (-2 * c_self);
        table.rows.push_back({n, e8, asd_index(e8, 0, ends)});
    }
    table.minimum = table.rows.size();
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        if (table.minimum == table.rows.size() || table.rows[i].index < table.rows[table.minimum].index) {
            table.minimum = i;
        }
    }
    if (table.minimum < table.rows.size()) {
        const auto least = table.rows[table.minimum].index;
        table.unique_minimum = std::count_if(table.rows.begin(), table.rows.end(),
                                             [&](const NReducible& r) { return r.index == least; }) == 1;
    }
    return table;
}

Scenario parse_scenario(std::string_view name) {
    for (const auto& [s, n] : kScenarioNames) {
        if (n == name) {
            return s;
        }
    }
    throw std::invalid_argument("unknown scenario '" + std::string(name) + "'");
}

std::string to_string(Scenario s) {
    for (const auto& [k, n] : kScenarioNames) {
        if (k == s) {
            return std::string(n);
        }
    }
    return "unknown";
}

std::vector<Scenario> all_scenarios() {
    std::vector<Scenario> out;
    for (const auto& [s, n] : kScenarioNames) {
        out.push_back(s);
    }
    return out;
}

IndexBound broken_index_bound(Scenario s, int family_dim) {
    const int reducible = reducible_piece_bound();
    const int n_min = to_int(reducibles_on_N(Rational(-1, 2), 1, 1).rows.front().index, "index");
    const int central = stabilizer_dim(FlatLimit::central);
    const int abelian = stabilizer_dim(FlatLimit::abelian);
    switch (s) {
        case Scenario::irreducible_pieces_reducible_limit:
            if (family_dim < 0) {
                throw std::invalid_argument("family dimension must be non-negative");
            }
            return finish(s, {{"cylinder component", 1},
                              {"reducible interior limit, r(A) >= 1", 1},
                              {"irreducible piece over the family, -dim G", -family_dim}});
        case Scenario::reducible_unbroken_bplus0:
            return finish(s, {{"energy term 8E >= 0", 0}, {"-3(1 + b+) with b+ = 0", -3}});
        case Scenario::reducible_unbroken_bplus1_rp3:
            return finish(s,
                          {{"energy term 8E > 0 since c is primitive near the RP3 end", 0},
                           {"-3(1 + b+) with b+ = 1", -6},
                           {"abelian limit on the RP3 end", (3 - abelian) / 2}},
                          true);
        case Scenario::reducible_unbroken:
            return finish(s, {{"weaker of the b+ = 0 and b+ = 1 branches", reducible}});
        case Scenario::reducible_glued_to_cylinders:
            return finish(s, {{"cylinder component", 1},
                              {"central interior limit", central},
                              {"reducible piece", reducible},
                              {"central interior limit", central},
                              {"cylinder component", 1}});
        case Scenario::intermediate_reducible_limit:
            return finish(s, {{"constituent indices >= 0", 0}, {"reducible intermediate limit, r(A) >= 1", 1}});
        case Scenario::intermediate_one_reducible:
            return finish(s, {{"cylinder component", 1},
                              {"central limit", central},
                              {"reducible piece", reducible},
                              {"central limit", central},
                              {"irreducible piece", 0}});
        case Scenario::intermediate_both_reducible:
            return finish(s, {{"cylinder component", 1},
                              {"central limit", central},
                              {"reducible piece", reducible},
                              {"central limit", central},
                              {"reducible piece", reducible},
                              {"central limit", central},
                              {"cylinder component", 1}});
        case Scenario::intermediate_split: {
            const int least = std::min({broken_index_bound(Scenario::intermediate_reducible_limit).bound,
                                        broken_index_bound(Scenario::intermediate_one_reducible).bound,
                                        broken_index_bound(Scenario::intermediate_both_reducible).bound});
            return finish(s, {{"least of the three reducibility patterns", least}});
        }
        case Scenario::middle_end_s3:
            return finish(s, {{"irreducible piece on W", 0}, {"reducible on N", n_min}, {"central limit on S3", central}});
        case Scenario::middle_end_rp3:
            return finish(s,
                          {{"irreducible piece on W", 0}, {"reducible on N", n_min}, {"abelian limit on RP3", abelian}});
        case Scenario::middle_end_reducible_piece:
            return finish(s, {{"two cylinders and two central limits", 8},
                              {"reducible piece on W", reducible},
                              {"reducible on N", n_min},
                              {"least stabilizer on the middle end", abelian}});
        case Scenario::pentagon_interior:
            return finish(s, {{"irreducible over a two-parameter family, -dim G", -2}});
        case Scenario::pentagon_s3_face:
            return finish(s, {{"irreducible piece over a one-parameter family", -1},
                              {"reducible on N", n_min},
                              {"central limit on S3", central}});
        case Scenario::pentagon_intermediate_face:
            return finish(s, {{"irreducible piece over a one-parameter family", -1},
                              {"irreducible piece over a fixed metric", 0}});
        case Scenario::pentagon_rp3_face:
            return finish(s, {{"irreducible piece over an interval of metrics", -1},
                              {"abelian reducible on N", n_min},
                              {"abelian limit on RP3", abelian}});
        case Scenario::pentagon_s2xs1_face:
            return finish(s, {{"piece on V over the face", -1}, {"remaining pieces", 0}});
    }
    throw std::invalid_argument("unknown scenario");
}

}  // namespace ipmod
