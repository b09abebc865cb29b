#include "ipmod/triangle.hpp"

#include <set>

#include <json.hpp>

#include "ipmod/errors.hpp"

namespace ipmod {

using chain::BitMatrix;
using chain::ChainMap;
using nlohmann::json;

namespace {

bool congruent(int a, int b, int p) { return p == 0 ? a == b : ((a - b) % p + p) % p == 0; }

std::vector<int> degrees_of(const GradedComplex& c) {
    if (c.period() == 0) {
        return c.support();
    }
    std::vector<int> all;
    for (int n = 0; n < c.period(); ++n) {
        all.push_back(n);
    }
    return all;
}

std::optional<int> first_nonzero(const GradedMap& m, const GradedComplex& source, const GradedComplex& target) {
    for (int n : source.support()) {
        if (!chain::block(m, source, target, n).is_zero()) {
            return n;
        }
    }
    return std::nullopt;
}

// Sum of maps source -> target; zero terms may carry any degree.
GradedMap sum(const std::vector<GradedMap>& terms, const GradedComplex& source, const GradedComplex& target,
              int degree) {
    auto out = chain::zero_map(degree);
    for (const auto& t : terms) {
        if (chain::is_zero(t, source, target)) {
            continue;
        }
        if (!congruent(t.degree, degree, source.period())) {
            throw validation_error("map degrees are inconsistent: " + std::to_string(t.degree) + " vs " +
                                   std::to_string(degree));
        }
        out = chain::add(out, t, source, target);
    }
    return out;
}

std::string idx(int i) { return std::to_string(i); }

GradedComplex as_complex(const GradedDimVector& v) {
    GradedComplex c(v.period);
    for (int d = 0; d < v.period; ++d) {
        c.set_dim(d, v.dims[static_cast<std::size_t>(d)]);
    }
    return c;
}

ExactnessReport check_exact(const std::array<GradedComplex, 3>& v, const std::vector<GradedMap>& maps) {
    if (maps.size() < 2 || maps.size() > 3) {
        throw std::invalid_argument("exactness check needs two or three maps");
    }
    ExactnessReport r;
    for (std::size_t j = 0; j < maps.size(); ++j) {
        const auto& src = v[j];
        const auto& tgt = v[(j + 1) % 3];
        chain::check_shapes(maps[j], src, tgt);
        bool inj = true;
        for (int n : degrees_of(src)) {
            inj = inj && gf2::rank(chain::block(maps[j], src, tgt, n)) == src.dim(n);
        }
        bool surj = true;
        for (int m : degrees_of(tgt)) {
            surj = surj && gf2::rank(chain::block(maps[j], src, tgt, m - maps[j].degree)) == tgt.dim(m);
        }
        r.injective.push_back(inj);
        r.surjective.push_back(surj);
    }
    for (std::size_t k = 0; k < 3; ++k) {
        const auto in = (k + 2) % 3;
        if (k >= maps.size() || in >= maps.size()) {
            continue;
        }
        const auto& from = v[in];
        const auto& here = v[k];
        const auto& to = v[(k + 1) % 3];
        for (int n : degrees_of(here)) {
            const auto a = chain::block(maps[in], from, here, n - maps[in].degree);
            const auto b = chain::block(maps[k], here, to, n);
            if (!(b * a).is_zero() || gf2::rank(a) + gf2::rank(b) != here.dim(n)) {
                r.exact = false;
                r.failures.push_back("not exact at vertex " + std::to_string(k) + " in degree " + std::to_string(n));
            }
        }
    }
    return r;
}

// Random generation helpers.

bool coin(std::mt19937_64& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

BitMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    BitMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            if (coin(rng)) {
                m.set(r, c);
            }
        }
    }
    return m;
}

std::pair<BitMatrix, BitMatrix> random_invertible(std::mt19937_64& rng, std::size_t n) {
    for (;;) {
        auto m = random_matrix(rng, n, n);
        if (auto inv = gf2::inverse(m)) {
            return {m, *inv};
        }
    }
}

using BasisChange = std::map<int, std::pair<BitMatrix, BitMatrix>>;

BasisChange random_basis_change(std::mt19937_64& rng, const GradedComplex& c) {
    BasisChange p;
    for (int n : c.support()) {
        p.emplace(n, random_invertible(rng, c.dim(n)));
    }
    return p;
}

GradedMap conjugate(const GradedMap& m, const GradedComplex& src, const GradedComplex& tgt, const BasisChange& ps,
                    const BasisChange& pt) {
    GradedMap out;
    out.degree = m.degree;
    for (int n : src.support()) {
        const int t = tgt.normalize(n + m.degree);
        if (tgt.dim(t) == 0) {
            continue;
        }
        out.blocks[n] = pt.at(t).first * chain::block(m, src, tgt, n) * ps.at(n).second;
    }
    return out;
}

GradedComplex conjugate(const GradedComplex& c, const BasisChange& p) {
    GradedComplex out(c.period());
    for (int n : c.support()) {
        out.set_dim(n, c.dim(n));
    }
    for (int n : c.support()) {
        const int below = c.normalize(n - 1);
        if (c.dim(below) == 0) {
            continue;
        }
        out.set_differential(n, p.at(below).first * c.differential(n) * p.at(n).second);
    }
    return out;
}

GradedMap random_map(std::mt19937_64& rng, const GradedComplex& src, const GradedComplex& tgt, int degree) {
    GradedMap m;
    m.degree = degree;
    for (int n : src.support()) {
        const auto rows = tgt.dim(n + degree);
        if (rows > 0) {
            m.blocks[n] = random_matrix(rng, rows, src.dim(n));
        }
    }
    return m;
}

GradedMap pad(const GradedMap& m, const GradedComplex& old_src, const GradedComplex& new_src,
              const GradedComplex& old_tgt, const GradedComplex& new_tgt) {
    GradedMap out;
    out.degree = m.degree;
    for (int n : new_src.support()) {
        const auto rows = new_tgt.dim(n + m.degree);
        if (rows == 0) {
            continue;
        }
        BitMatrix b(rows, new_src.dim(n));
        if (old_src.dim(n) > 0 && old_tgt.dim(n + m.degree) > 0) {
            const auto old = chain::block(m, old_src, old_tgt, n);
            for (std::size_t r = 0; r < old.rows(); ++r) {
                for (std::size_t c = 0; c < old.cols(); ++c) {
                    if (old.get(r, c)) {
                        b.set(r, c);
                    }
                }
            }
        }
        out.blocks[n] = std::move(b);
    }
    return out;
}

GradedComplex contractible_pair(int period, int n) {
    GradedComplex p(period);
    if (period == 1) {
        p.set_dim(0, 2);
        auto d = BitMatrix(2, 2);
        d.set(1, 0);
        p.set_differential(0, d);
        return p;
    }
    p.set_dim(n, 1);
    p.set_dim(n - 1, 1);
    p.set_differential(n, BitMatrix::identity(1));
    return p;
}

int random_degree(std::mt19937_64& rng, int period) {
    if (period == 0) {
        return std::uniform_int_distribution<int>(-2, 2)(rng);
    }
    return std::uniform_int_distribution<int>(0, period - 1)(rng);
}

GradedMap random_combination(std::mt19937_64& rng, const std::vector<GradedMap>& basis, const GradedComplex& src,
                             const GradedComplex& tgt, int degree) {
    auto out = chain::zero_map(degree);
    for (const auto& b : basis) {
        if (coin(rng)) {
            out = chain::add(out, b, src, tgt);
        }
    }
    return out;
}

// JSON helpers.

int parse_key(const std::string& key, const std::string& where) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(key, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != key.size() || key.empty()) {
        throw validation_error(where + ": '" + key + "' is not an integer key");
    }
    return v;
}

json entries_of(const BitMatrix& m) {
    json out = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (m.get(r, c)) {
                out.push_back({r, c});
            }
        }
    }
    return out;
}

BitMatrix matrix_of(const json& entries, std::size_t rows, std::size_t cols, const std::string& where) {
    if (!entries.is_array()) {
        throw validation_error(where + ": entries must be an array of [row, col] pairs");
    }
    BitMatrix m(rows, cols);
    for (const auto& e : entries) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned()) {
            throw validation_error(where + ": entries must be [row, col] pairs of non-negative integers");
        }
        const auto r = e[0].get<std::size_t>();
        const auto c = e[1].get<std::size_t>();
        if (r >= rows || c >= cols) {
            throw validation_error(where + ": entry [" + std::to_string(r) + ", " + std::to_string(c) +
                                   "] outside a " + std::to_string(rows) + "x" + std::to_string(cols) + " block");
        }
        m.flip(r, c);
    }
    return m;
}

json complex_to_json(const GradedComplex& c) {
    json dims = json::object();
    json d = json::object();
    for (int n : c.support()) {
        dims[std::to_string(n)] = c.dim(n);
        const auto m = c.differential(n);
        if (!m.is_zero()) {
            d[std::to_string(n)] = entries_of(m);
        }
    }
    return {{"dims", dims}, {"d", d}};
}

json map_to_json(const GradedMap& m, const GradedComplex& src, const GradedComplex& tgt) {
    json blocks = json::object();
    for (int n : src.support()) {
        const auto b = chain::block(m, src, tgt, n);
        if (!b.is_zero()) {
            blocks[std::to_string(n)] = entries_of(b);
        }
    }
    return {{"degree", m.degree}, {"blocks", blocks}};
}

GradedComplex complex_from_json(const json& j, int period, const std::string& where) {
    if (!j.is_object()) {
        throw validation_error(where + " must be an object");
    }
    GradedComplex c(period);
    if (const auto it = j.find("dims"); it != j.end()) {
        if (!it->is_object()) {
            throw validation_error(where + ": 'dims' must be an object");
        }
        for (const auto& [key, value] : it->items()) {
            if (!value.is_number_unsigned()) {
                throw validation_error(where + ": dimension in degree " + key + " must be a non-negative integer");
            }
            c.set_dim(parse_key(key, where), value.get<std::size_t>());
        }
    }
    if (const auto it = j.find("d"); it != j.end()) {
        for (const auto& [key, value] : it->items()) {
            const int n = parse_key(key, where);
            c.set_differential(n, matrix_of(value, c.dim(n - 1), c.dim(n), where + " d_" + key));
        }
    }
    return c;
}

GradedMap map_from_json(const json& j, const GradedComplex& src, const GradedComplex& tgt, std::optional<int> degree,
                        const std::string& where) {
    if (!j.is_object()) {
        throw validation_error(where + " must be an object");
    }
    GradedMap m;
    if (const auto it = j.find("degree"); it != j.end()) {
        if (!it->is_number_integer()) {
            throw validation_error(where + ": 'degree' must be an integer");
        }
        m.degree = it->get<int>();
    } else if (degree) {
        m.degree = *degree;
    } else {
        throw validation_error(where + ": missing 'degree'");
    }
    if (const auto it = j.find("blocks"); it != j.end()) {
        for (const auto& [key, value] : it->items()) {
            const int n = src.normalize(parse_key(key, where));
            m.blocks[n] = matrix_of(value, tgt.dim(n + m.degree), src.dim(n), where + " block " + key);
        }
    }
    return m;
}

}  // namespace

GradedMap TriangleData::q(int i) const {
    if (q_maps) {
        return (*q_maps)[slot(i)];
    }
    return chain::identity_map(C(i));
}

void check_structure(const TriangleData& t) {
    const int p = t.period();
    for (int i = -1; i <= 1; ++i) {
        if (t.C(i).period() != p) {
            throw validation_error("complexes have different grading periods");
        }
    }
    try {
        for (int i = -1; i <= 1; ++i) {
            chain::check_shapes(t.f(i), t.C(i), t.C(i - 1));
            chain::check_shapes(t.g(i), t.C(i), t.C(i - 2));
            chain::check_shapes(t.h(i), t.C(i), t.C(i));
            if (t.q_maps) {
                chain::check_shapes(t.q(i), t.C(i), t.C(i));
            }
            if (t.homotopies) {
                chain::check_shapes((*t.homotopies)[TriangleData::slot(i)], t.C(i), t.C(i));
            }
        }
    } catch (const chain::chain_error& e) {
        throw validation_error(std::string("map shape mismatch: ") + e.what());
    }
    auto nonzero = [&](int i) { return t.C(i).total_dim() > 0; };
    auto require = [&](bool ok, const std::string& what, int i) {
        if (!ok) {
            throw validation_error("degree bookkeeping fails for " + what + " at i = " + idx(i));
        }
    };
    for (int i = -1; i <= 1; ++i) {
        const int a_i = t.f(i).degree;
        const int a_prev = t.f(i - 1).degree;
        const int a_prev2 = t.f(i - 2).degree;
        const int deg_g = t.g(i).degree;
        const int deg_h = t.h(i).degree;
        if (nonzero(i) && nonzero(i - 2)) {
            require(congruent(deg_g, a_i + a_prev + 1, p), "deg g_i = deg f_i + deg f_{i-1} + 1", i);
        }
        if (!nonzero(i)) {
            continue;
        }
        require(congruent(deg_h - 1, 0, p), "deg h_i = 1", i);
        if (nonzero(i - 2)) {
            require(congruent(a_prev2 + deg_g, 0, p), "deg f_{i-2} + deg g_i = 0", i);
        }
        if (nonzero(i - 1)) {
            require(congruent(t.g(i - 1).degree + a_i, 0, p), "deg g_{i-1} + deg f_i = 0", i);
        }
        if (t.q_maps) {
            require(congruent(t.q(i).degree, 0, p), "deg q_i = 0", i);
        }
        if (t.homotopies) {
            require(congruent((*t.homotopies)[TriangleData::slot(i)].degree, 1, p), "deg K_i = 1", i);
        }
    }
}

IdentityReport verify_identities(const TriangleData& t) {
    check_structure(t);
    IdentityReport r;
    auto fail = [&](const std::string& what, int i, int n) {
        r.ok = false;
        r.failed_identity = what;
        r.index = i;
        r.degree = n;
        return r;
    };
    for (int i = -1; i <= 1; ++i) {
        const auto& c = t.C(i);
        for (int n : c.support()) {
            if (!(c.differential(n - 1) * c.differential(n)).is_zero()) {
                return fail("d^2 = 0", i, n);
            }
        }
    }
    for (int i = -1; i <= 1; ++i) {
        const auto b = chain::boundary_of(t.f(i), t.C(i), t.C(i - 1));
        if (const auto n = first_nonzero(b, t.C(i), t.C(i - 1))) {
            return fail("df + fd = 0", i, *n);
        }
    }
    for (int i = -1; i <= 1; ++i) {
        const auto& s = t.C(i);
        const auto& target = t.C(i - 2);
        const auto total = sum({chain::boundary_of(t.g(i), s, target), chain::compose(t.f(i - 1), t.f(i), s, t.C(i - 1), target)},
                               s, target, t.g(i).degree - 1);
        if (const auto n = first_nonzero(total, s, target)) {
            return fail("dg + ff + gd = 0", i, *n);
        }
    }
    for (int i = -1; i <= 1; ++i) {
        const auto& s = t.C(i);
        const auto total = sum({chain::boundary_of(t.h(i), s, s), chain::compose(t.f(i - 2), t.g(i), s, t.C(i - 2), s),
                                chain::compose(t.g(i - 1), t.f(i), s, t.C(i - 1), s), t.q(i)},
                               s, s, 0);
        if (const auto n = first_nonzero(total, s, s)) {
            return fail("dh + fg + gf + hd = q", i, *n);
        }
    }
    if (!t.q_maps) {
        r.homotopy_route = "q is the identity";
        return r;
    }
    std::array<GradedMap, 3> witnesses;
    for (int i = -1; i <= 1; ++i) {
        const auto& s = t.C(i);
        const auto target = chain::add(t.q(i), chain::identity_map(s), s, s);
        if (t.homotopies) {
            const auto& k = (*t.homotopies)[TriangleData::slot(i)];
            const auto diff = sum({chain::boundary_of(k, s, s), target}, s, s, 0);
            if (const auto n = first_nonzero(diff, s, s)) {
                return fail("q ~ id", i, *n);
            }
            witnesses[TriangleData::slot(i)] = k;
        } else {
            auto k = chain::find_nullhomotopy(s, s, target);
            if (!k) {
                return fail("q ~ id", i, 0);
            }
            witnesses[TriangleData::slot(i)] = *k;
        }
    }
    r.homotopy_route = t.homotopies ? "supplied homotopy" : "solved homotopy";
    r.homotopies = witnesses;
    return r;
}

TriangleVerdict detect_triangle(const TriangleData& t) {
    TriangleVerdict v;
    v.identities = verify_identities(t);
    if (!v.identities.ok) {
        v.refused = true;
        v.reason = "identity " + v.identities.failed_identity + " fails at i = " + idx(v.identities.index) +
                   ", degree " + std::to_string(v.identities.degree);
        return v;
    }
    v.detected = true;
    for (int i = -1; i <= 1; ++i) {
        const auto& ci = t.C(i);
        const ChainMap fprev{t.C(i - 1), t.C(i - 2), t.f(i - 1)};
        const auto cone = chain::cone(fprev);
        const int a = t.f(i).degree;
        GradedMap comparison;
        comparison.degree = a;
        for (int n : ci.support()) {
            const auto top = chain::block(t.f(i), ci, t.C(i - 1), n);
            const auto rows = cone.dim(n + a);
            if (rows == 0) {
                continue;
            }
            BitMatrix m(rows, ci.dim(n));
            for (std::size_t r = 0; r < top.rows(); ++r) {
                for (std::size_t c = 0; c < top.cols(); ++c) {
                    if (top.get(r, c)) {
                        m.set(r, c);
                    }
                }
            }
            if (t.C(i - 2).dim(n + a + fprev.map.degree + 1) > 0) {
                const auto bottom = chain::block(t.g(i), ci, t.C(i - 2), n);
                for (std::size_t r = 0; r < bottom.rows(); ++r) {
                    for (std::size_t c = 0; c < bottom.cols(); ++c) {
                        if (bottom.get(r, c)) {
                            m.set(top.rows() + r, c);
                        }
                    }
                }
            }
            comparison.blocks[n] = std::move(m);
        }
        const ChainMap cmp{ci, cone, comparison};
        VertexReport vr;
        vr.index = i;
        vr.homology = chain::homology_dims(ci);
        vr.cone_homology = chain::homology_dims(cone);
        std::set<int> degrees;
        for (int n : degrees_of(ci)) {
            degrees.insert(n);
        }
        for (int m : degrees_of(cone)) {
            degrees.insert(ci.normalize(m - a));
        }
        if (const auto bad = chain::chain_map_violation(cmp)) {
            vr.quasi_isomorphism = false;
            vr.failing_degree = *bad;
        } else {
            for (int n : degrees) {
                const auto hc = chain::homology(ci, n).dimension;
                const auto hk = chain::homology(cone, n + a).dimension;
                if (hc != hk || gf2::rank(chain::induced_map(cmp, n)) != hc) {
                    vr.quasi_isomorphism = false;
                    vr.failing_degree = n;
                    break;
                }
            }
        }
        v.detected = v.detected && vr.quasi_isomorphism;
        v.vertices.push_back(std::move(vr));
    }

    // Homology triangle H_{-1} -> H_1 -> H_0 -> H_{-1} under (f_{-1})_*, (f_1)_*, (f_0)_*.
    std::array<GradedComplex, 3> spaces;
    std::vector<GradedMap> induced;
    const std::array<int, 3> order{-1, 1, 0};
    for (std::size_t k = 0; k < 3; ++k) {
        const int i = order[k];
        GradedComplex h(t.period());
        for (const auto& [n, d] : chain::homology_dims(t.C(i))) {
            h.set_dim(n, d);
        }
        spaces[k] = h;
    }
    for (std::size_t k = 0; k < 3; ++k) {
        const int i = order[k];
        const ChainMap fi{t.C(i), t.C(i - 1), t.f(i)};
        GradedMap m;
        m.degree = t.f(i).degree;
        for (int n : degrees_of(t.C(i))) {
            const auto mat = chain::induced_map(fi, n);
            v.f_ranks[static_cast<std::size_t>(i + 1)][n] = gf2::rank(mat);
            if (!mat.empty()) {
                m.blocks[n] = mat;
            }
        }
        induced.push_back(std::move(m));
    }
    v.exact = check_exact(spaces, induced).exact;

    for (int k = -1; k <= 1; ++k) {
        if (t.C(k).total_dim() != 0) {
            continue;
        }
        const ChainMap g{t.C(k + 1), t.C(k - 1), t.g(k + 1)};
        bool iso = !chain::chain_map_violation(g).has_value();
        std::set<int> degrees;
        for (int n : degrees_of(g.source)) {
            degrees.insert(n);
        }
        for (int m : degrees_of(g.target)) {
            degrees.insert(g.source.normalize(m - g.map.degree));
        }
        for (int n : degrees) {
            if (!iso) {
                break;
            }
            const auto hs = chain::homology(g.source, n).dimension;
            const auto ht = chain::homology(g.target, n + g.map.degree).dimension;
            iso = hs == ht && gf2::rank(chain::induced_map(g, n)) == hs;
        }
        const auto a = idx(TriangleData::slot(k + 1) == 2 ? -1 : TriangleData::slot(k + 1));
        const auto b = idx(TriangleData::slot(k - 1) == 2 ? -1 : TriangleData::slot(k - 1));
        if (iso) {
            v.notes.push_back("C_" + idx(k) + " = 0: g_" + a + " induces an isomorphism H(C_" + a + ") -> H(C_" + b +
                              ")");
        } else {
            v.notes.push_back("C_" + idx(k) + " = 0 but g_" + a + " is not a homology isomorphism");
        }
    }
    for (const auto& vr : v.vertices) {
        bool acyclic = true;
        for (const auto& [n, d] : vr.cone_homology) {
            acyclic = acyclic && d == 0;
        }
        if (acyclic) {
            v.notes.push_back("Cone(f_" + idx(vr.index - 1 < -1 ? 1 : vr.index - 1) + ") is acyclic, so H(C_" +
                              idx(vr.index) + ") = 0");
        }
    }
    return v;
}

GradedDimVector::GradedDimVector(int p, std::vector<std::size_t> d) : period(p), dims(std::move(d)) {
    if (p <= 0 || dims.size() != static_cast<std::size_t>(p)) {
        throw std::invalid_argument("graded dimension vector needs exactly `period` entries");
    }
}

std::size_t GradedDimVector::operator()(int d) const {
    return dims[static_cast<std::size_t>(((d % period) + period) % period)];
}

std::size_t GradedDimVector::total() const {
    std::size_t s = 0;
    for (auto d : dims) {
        s += d;
    }
    return s;
}

long long GradedDimVector::euler_characteristic() const {
    long long chi = 0;
    for (int d = 0; d < period; ++d) {
        chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(dims[static_cast<std::size_t>(d)]);
    }
    return chi;
}

ExactnessReport exactness_check(const std::array<GradedDimVector, 3>& vertices, const std::vector<GradedMap>& maps) {
    const int p = vertices[0].period;
    if (vertices[1].period != p || vertices[2].period != p) {
        throw std::invalid_argument("exactness check needs vertices with a common period");
    }
    return check_exact({as_complex(vertices[0]), as_complex(vertices[1]), as_complex(vertices[2])}, maps);
}

GradedDimVector surgery_ranks(int n, const GradedDimVector& base) {
    if (n == 0) {
        throw std::invalid_argument("surgery coefficient 1/0 does not give a homology sphere");
    }
    const int sign = n > 0 ? 1 : -1;
    const int count = n > 0 ? n : -n;
    GradedDimVector out(base.period, std::vector<std::size_t>(static_cast<std::size_t>(base.period), 0));
    for (int d = 0; d < base.period; ++d) {
        for (int i = 0; i < count; ++i) {
            out.dims[static_cast<std::size_t>(d)] += base(d + 2 * i * sign);
        }
    }
    return out;
}

GradedDimVector collapse_to_4(const GradedDimVector& v) {
    if (v.period != 8 && v.period != 4) {
        throw std::invalid_argument("collapse to Z/4 needs a Z/8 or Z/4 vector");
    }
    GradedDimVector out(4, {0, 0, 0, 0});
    for (int d = 0; d < v.period; ++d) {
        out.dims[static_cast<std::size_t>(d % 4)] += v.dims[static_cast<std::size_t>(d)];
    }
    return out;
}

GradedDimVector degree_shift_bridge(const GradedDimVector& v) {
    const auto c = collapse_to_4(v);
    GradedDimVector out(4, {0, 0, 0, 0});
    for (int m = 0; m < 4; ++m) {
        out.dims[static_cast<std::size_t>(m)] = c(m + 3);
    }
    return out;
}

GradedComplex random_complex(std::mt19937_64& rng, int period, std::size_t max_dim) {
    const auto total = std::uniform_int_distribution<std::size_t>(0, max_dim)(rng);
    GradedComplex shape(period);
    std::map<int, std::size_t> dims;
    struct Arrow {
        int n;
        std::size_t src;
        std::size_t tgt;
    };
    std::vector<Arrow> arrows;
    std::size_t used = 0;
    while (used < total) {
        const int n = shape.normalize(random_degree(rng, period));
        if (total - used >= 2 && coin(rng)) {
            const auto src = dims[n]++;
            const auto tgt = dims[shape.normalize(n - 1)]++;
            arrows.push_back({n, src, tgt});
            used += 2;
        } else {
            ++dims[n];
            ++used;
        }
    }
    GradedComplex c(period);
    for (const auto& [n, d] : dims) {
        c.set_dim(n, d);
    }
    std::map<int, BitMatrix> diffs;
    for (const auto& a : arrows) {
        auto it = diffs.find(a.n);
        if (it == diffs.end()) {
            it = diffs.emplace(a.n, BitMatrix(c.dim(a.n - 1), c.dim(a.n))).first;
        }
        it->second.set(a.tgt, a.src);
    }
    for (auto& [n, d] : diffs) {
        c.set_differential(n, std::move(d));
    }
    return conjugate(c, random_basis_change(rng, c));
}

TriangleData generate_triangle(std::mt19937_64& rng, const TriangleGeneratorOptions& options) {
    if (options.periods.empty()) {
        throw std::invalid_argument("generator needs at least one grading period");
    }
    for (int attempt = 0; attempt < 1000; ++attempt) {
        const int p = options.periods[std::uniform_int_distribution<std::size_t>(0, options.periods.size() - 1)(rng)];
        const auto quarter = options.max_total_dim / 4;
        const auto a = random_complex(rng, p, quarter);
        const auto b = random_complex(rng, p, quarter);
        const auto phi = random_combination(rng, chain::chain_map_basis(a, b, 0), a, b, 0);
        const ChainMap cm{a, b, phi};
        const auto cone = chain::cone(cm);

        TriangleData t;
        const int A = TriangleData::slot(-1);
        const int B = TriangleData::slot(1);
        const int K = TriangleData::slot(0);
        t.complexes[A] = a;
        t.complexes[B] = b;
        t.complexes[K] = cone;
        t.f_maps[A] = phi;
        t.f_maps[B] = chain::cone_inclusion(cm);
        t.f_maps[K] = chain::cone_projection(cm);
        t.g_maps[B] = chain::zero_map(0);
        GradedMap to_b;
        to_b.degree = 1;
        for (int n : cone.support()) {
            const auto rows = b.dim(n + 1);
            if (rows == 0) {
                continue;
            }
            BitMatrix m(rows, cone.dim(n));
            for (std::size_t r = 0; r < rows; ++r) {
                m.set(r, a.dim(n) + r);
            }
            to_b.blocks[n] = std::move(m);
        }
        t.g_maps[K] = to_b;
        GradedMap from_a;
        for (int n : a.support()) {
            BitMatrix m(cone.dim(n), a.dim(n));
            for (std::size_t r = 0; r < a.dim(n); ++r) {
                m.set(r, r);
            }
            from_a.blocks[n] = std::move(m);
        }
        t.g_maps[A] = from_a;
        for (auto& h : t.h_maps) {
            h = chain::zero_map(1);
        }

        auto used = a.total_dim() + b.total_dim() + cone.total_dim();
        while (used + 2 <= options.max_total_dim && coin(rng)) {
            const int i = std::uniform_int_distribution<int>(-1, 1)(rng);
            const auto old = t.C(i);
            const auto grown = chain::direct_sum(old, contractible_pair(p, random_degree(rng, p)));
            auto& f_out = t.f_maps[TriangleData::slot(i)];
            auto& g_out = t.g_maps[TriangleData::slot(i)];
            auto& h_self = t.h_maps[TriangleData::slot(i)];
            auto& f_in = t.f_maps[TriangleData::slot(i + 1)];
            auto& g_in = t.g_maps[TriangleData::slot(i + 2)];
            f_out = pad(f_out, old, grown, t.C(i - 1), t.C(i - 1));
            g_out = pad(g_out, old, grown, t.C(i - 2), t.C(i - 2));
            h_self = pad(h_self, old, grown, old, grown);
            f_in = pad(f_in, t.C(i + 1), t.C(i + 1), old, grown);
            g_in = pad(g_in, t.C(i + 2), t.C(i + 2), old, grown);
            t.complexes[TriangleData::slot(i)] = grown;
            used += 2;
        }

        std::array<BasisChange, 3> change;
        for (int i = -1; i <= 1; ++i) {
            change[TriangleData::slot(i)] = random_basis_change(rng, t.C(i));
        }
        auto P = [&](int i) -> const BasisChange& { return change[TriangleData::slot(i)]; };
        TriangleData u = t;
        for (int i = -1; i <= 1; ++i) {
            const auto s = TriangleData::slot(i);
            u.complexes[s] = conjugate(t.C(i), P(i));
            u.f_maps[s] = conjugate(t.f(i), t.C(i), t.C(i - 1), P(i), P(i - 1));
            u.g_maps[s] = conjugate(t.g(i), t.C(i), t.C(i - 2), P(i), P(i - 2));
            u.h_maps[s] = conjugate(t.h(i), t.C(i), t.C(i), P(i), P(i));
        }
        t = u;

        for (int i = -1; i <= 1; ++i) {
            if (coin(rng)) {
                const auto k = random_map(rng, t.C(i), t.C(i - 1), t.f(i).degree + 1);
                auto& f = t.f_maps[TriangleData::slot(i)];
                f = chain::add(f, chain::boundary_of(k, t.C(i), t.C(i - 1)), t.C(i), t.C(i - 1));
            }
        }

        bool solvable = true;
        for (int i = -1; i <= 1 && solvable; ++i) {
            const auto r = chain::compose(t.f(i - 1), t.f(i), t.C(i), t.C(i - 1), t.C(i - 2));
            auto g = chain::find_nullhomotopy(t.C(i), t.C(i - 2), r);
            if (!g) {
                solvable = false;
                break;
            }
            if (coin(rng, 1.0 / 3)) {
                const auto basis = chain::chain_map_basis(t.C(i), t.C(i - 2), g->degree);
                *g = chain::add(*g, random_combination(rng, basis, t.C(i), t.C(i - 2), g->degree), t.C(i), t.C(i - 2));
            }
            t.g_maps[TriangleData::slot(i)] = *g;
        }
        if (!solvable) {
            continue;
        }

        if (coin(rng)) {
            std::array<GradedMap, 3> q;
            std::array<GradedMap, 3> witness;
            for (int i = -1; i <= 1; ++i) {
                const auto k = random_map(rng, t.C(i), t.C(i), 1);
                q[TriangleData::slot(i)] = chain::add(chain::identity_map(t.C(i)), chain::boundary_of(k, t.C(i), t.C(i)),
                                                      t.C(i), t.C(i));
                witness[TriangleData::slot(i)] = k;
            }
            t.q_maps = q;
            if (coin(rng)) {
                t.homotopies = witness;
            }
        }
        for (int i = -1; i <= 1 && solvable; ++i) {
            const auto& s = t.C(i);
            const auto r = sum({t.q(i), chain::compose(t.f(i - 2), t.g(i), s, t.C(i - 2), s),
                                chain::compose(t.g(i - 1), t.f(i), s, t.C(i - 1), s)},
                               s, s, 0);
            auto h = chain::find_nullhomotopy(s, s, r);
            if (!h) {
                solvable = false;
                break;
            }
            t.h_maps[TriangleData::slot(i)] = *h;
        }
        if (!solvable) {
            continue;
        }
        return t;
    }
    throw std::runtime_error("triangle generator failed to produce a solvable instance");
}

TriangleData parse_triangle(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw validation_error(std::string("triangle file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw validation_error("triangle file must be a JSON object");
    }
    const auto pit = doc.find("period");
    if (pit == doc.end() || !pit->is_number_integer() || pit->get<int>() < 0) {
        throw validation_error("triangle file needs a non-negative integer 'period'");
    }
    const int period = pit->get<int>();
    TriangleData t;
    const auto cit = doc.find("complexes");
    if (cit == doc.end() || !cit->is_object()) {
        throw validation_error("triangle file needs a 'complexes' object keyed by -1, 0, 1");
    }
    try {
        for (int i = -1; i <= 1; ++i) {
            const auto key = idx(i);
            const auto it = cit->find(key);
            t.complexes[TriangleData::slot(i)] =
                it == cit->end() ? GradedComplex(period) : complex_from_json(*it, period, "complex C_" + key);
        }
        auto family = [&](const char* name, int i) -> const json* {
            const auto it = doc.find(name);
            if (it == doc.end()) {
                return nullptr;
            }
            const auto e = it->find(idx(i));
            return e == it->end() ? nullptr : &*e;
        };
        for (int i = -1; i <= 1; ++i) {
            const auto* j = family("f", i);
            t.f_maps[TriangleData::slot(i)] = j ? map_from_json(*j, t.C(i), t.C(i - 1), 0, "f_" + idx(i)) : chain::zero_map(0);
        }
        for (int i = -1; i <= 1; ++i) {
            const int deg = t.f(i).degree + t.f(i - 1).degree + 1;
            const auto* j = family("g", i);
            t.g_maps[TriangleData::slot(i)] =
                j ? map_from_json(*j, t.C(i), t.C(i - 2), deg, "g_" + idx(i)) : chain::zero_map(deg);
        }
        for (int i = -1; i <= 1; ++i) {
            const int deg = t.f(i - 2).degree + t.g(i).degree + 1;
            const auto* j = family("h", i);
            t.h_maps[TriangleData::slot(i)] = j ? map_from_json(*j, t.C(i), t.C(i), deg, "h_" + idx(i)) : chain::zero_map(deg);
        }
        if (doc.contains("q")) {
            std::array<GradedMap, 3> q;
            for (int i = -1; i <= 1; ++i) {
                const auto* j = family("q", i);
                q[TriangleData::slot(i)] =
                    j ? map_from_json(*j, t.C(i), t.C(i), 0, "q_" + idx(i)) : chain::identity_map(t.C(i));
            }
            t.q_maps = q;
        }
        if (doc.contains("homotopy")) {
            std::array<GradedMap, 3> k;
            for (int i = -1; i <= 1; ++i) {
                const auto* j = family("homotopy", i);
                if (j == nullptr) {
                    throw validation_error("'homotopy' must list K_-1, K_0 and K_1");
                }
                k[TriangleData::slot(i)] = map_from_json(*j, t.C(i), t.C(i), 1, "homotopy K_" + idx(i));
            }
            t.homotopies = k;
        }
    } catch (const chain::chain_error& e) {
        throw validation_error(e.what());
    }
    return t;
}

std::string dump_triangle(const TriangleData& t) {
    json doc;
    doc["period"] = t.period();
    doc["complexes"] = json::object();
    doc["f"] = json::object();
    doc["g"] = json::object();
    doc["h"] = json::object();
    for (int i = -1; i <= 1; ++i) {
        const auto key = idx(i);
        doc["complexes"][key] = complex_to_json(t.C(i));
        doc["f"][key] = map_to_json(t.f(i), t.C(i), t.C(i - 1));
        doc["g"][key] = map_to_json(t.g(i), t.C(i), t.C(i - 2));
        doc["h"][key] = map_to_json(t.h(i), t.C(i), t.C(i));
        if (t.q_maps) {
            doc["q"][key] = map_to_json(t.q(i), t.C(i), t.C(i));
        }
        if (t.homotopies) {
            doc["homotopy"][key] = map_to_json((*t.homotopies)[TriangleData::slot(i)], t.C(i), t.C(i));
        }
    }
    return doc.dump(2);
}

}  // namespace ipmod
