#include "ipmod/persistence.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "ipmod/errors.hpp"
#include "ipmod/gf2.hpp"

namespace ipmod {

namespace {

int floor_div8(int d) { return d >= 0 ? d / 8 : -((-d + 7) / 8); }

struct Translate {
    std::size_t rep;
    int shift;
};

// Translates of representatives landing in grading d with cs + shift <= level.
std::vector<Translate> translates_in(const FilteredComplex& c, int d, const Rational& level) {
    std::vector<Translate> out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        const auto& g = c.generators()[i];
        if ((d - g.grading) % 8 != 0) {
            continue;
        }
        const int k = (d - g.grading) / 8;
        if (g.cs + k <= level) {
            out.push_back({i, k});
        }
    }
    return out;
}

// Matrix of d from the `from` translates to the `to` translates.
gf2::BitMatrix boundary_matrix(const FilteredComplex& c, const std::vector<Translate>& from,
                               const std::vector<Translate>& to) {
    std::map<std::pair<std::size_t, int>, std::size_t> row_of;
    for (std::size_t r = 0; r < to.size(); ++r) {
        row_of[{to[r].rep, to[r].shift}] = r;
    }
    gf2::BitMatrix m(to.size(), from.size());
    for (std::size_t col = 0; col < from.size(); ++col) {
        for (auto t : c.targets(from[col].rep)) {
            const auto it = row_of.find({t, from[col].shift});
            if (it != row_of.end()) {
                m.flip(it->second, col);
            }
        }
    }
    return m;
}

}  // namespace

FilteredComplex::FilteredComplex(std::vector<FlatGenerator> generators,
                                 std::vector<std::pair<std::string, std::string>> boundary)
    : generators_(std::move(generators)), boundary_(std::move(boundary)), targets_(generators_.size()) {
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        if (generators_[i].label.empty()) {
            throw validation_error("generator " + std::to_string(i) + " has an empty label");
        }
        if (!index.emplace(generators_[i].label, i).second) {
            throw validation_error("duplicate generator label '" + generators_[i].label + "'");
        }
    }
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& [from, to] : boundary_) {
        const auto pair_name = "boundary pair (" + from + " -> " + to + ")";
        const auto f = index.find(from);
        const auto t = index.find(to);
        if (f == index.end() || t == index.end()) {
            throw validation_error(pair_name + " names an unknown generator");
        }
        const auto& x = generators_[f->second];
        const auto& y = generators_[t->second];
        if (y.grading != x.grading - 1) {
            throw validation_error(pair_name + ": grading must drop by 1, got " + std::to_string(x.grading) +
                                   " -> " + std::to_string(y.grading));
        }
        if (!(y.cs < x.cs)) {
            throw validation_error(pair_name + ": filtration must strictly decrease, got cs " + to_string(x.cs) +
                                   " -> " + to_string(y.cs));
        }
        if (!seen.emplace(f->second, t->second).second) {
            throw validation_error(pair_name + " is listed twice");
        }
        targets_[f->second].push_back(t->second);
    }
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        std::map<std::size_t, int> dd;
        for (auto j : targets_[i]) {
            for (auto k : targets_[j]) {
                dd[k] ^= 1;
            }
        }
        for (const auto& [k, parity] : dd) {
            if (parity != 0) {
                throw validation_error("d o d is nonzero: d(d(" + generators_[i].label + ")) contains " +
                                       generators_[k].label);
            }
        }
    }
}

std::size_t FilteredComplex::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        if (generators_[i].label == label) {
            return i;
        }
    }
    throw std::out_of_range("no generator labelled '" + label + "'");
}

std::pair<int, int> window_split(int d) {
    const int k = floor_div8(d);
    return {d - 8 * k, k};
}

Barcode::Barcode(std::vector<Bar> bars) {
    for (auto& bar : bars) {
        if (!(ExtendedRational(bar.birth) < bar.death)) {
            throw std::invalid_argument("bar in degree " + std::to_string(bar.degree) + " has birth " +
                                        to_string(bar.birth) + " not below death " + to_string(bar.death));
        }
        const auto [w, k] = window_split(bar.degree);
        bar.degree = w;
        bar.birth -= k;
        bar.death = bar.death.plus(Rational(-k));
    }
    std::sort(bars.begin(), bars.end(), [](const Bar& a, const Bar& b) {
        if (a.degree != b.degree) {
            return a.degree < b.degree;
        }
        if (a.birth != b.birth) {
            return a.birth < b.birth;
        }
        return a.death < b.death;
    });
    bars_ = std::move(bars);
}

std::vector<Bar> Barcode::bars(int d) const {
    const auto [w, k] = window_split(d);
    std::vector<Bar> out;
    for (const auto& bar : bars_) {
        if (bar.degree == w) {
            out.push_back({d, bar.birth + k, bar.death.plus(Rational(k))});
        }
    }
    return out;
}

std::size_t Barcode::rank(const Rational& r, int d) const {
    std::size_t n = 0;
    for (const auto& bar : bars(d)) {
        n += bar.contains(r) ? 1 : 0;
    }
    return n;
}

std::size_t Barcode::rank_at_infinity(int d) const {
    const auto [w, k] = window_split(d);
    (void)k;
    return static_cast<std::size_t>(
        std::count_if(bars_.begin(), bars_.end(), [w = w](const Bar& b) { return b.degree == w && b.infinite(); }));
}

Barcode barcode(const FilteredComplex& c) {
    const auto n = c.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    const auto& gens = c.generators();
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (gens[a].cs != gens[b].cs) {
            return gens[a].cs < gens[b].cs;
        }
        return gens[a].label < gens[b].label;
    });
    std::vector<std::size_t> position(n);
    for (std::size_t p = 0; p < n; ++p) {
        position[order[p]] = p;
    }

    // Columns indexed by filtration position; low(j) is the last set row.
    std::vector<gf2::BitVector> columns(n, gf2::BitVector(n));
    for (std::size_t p = 0; p < n; ++p) {
        for (auto t : c.targets(order[p])) {
            columns[p].flip(position[t]);
        }
    }
    std::vector<std::size_t> owner_of_low(n, n);
    std::vector<bool> killed(n, false);
    std::vector<Bar> bars;
    for (std::size_t j = 0; j < n; ++j) {
        auto low = columns[j].last_set();
        while (low < n && owner_of_low[low] < n) {
            columns[j] ^= columns[owner_of_low[low]];
            low = columns[j].last_set();
        }
        if (low < n) {
            owner_of_low[low] = j;
            killed[low] = true;
            const auto& born = gens[order[low]];
            bars.push_back({born.grading, born.cs, ExtendedRational(gens[order[j]].cs)});
        }
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (!killed[j] && columns[j].is_zero()) {
            const auto& g = gens[order[j]];
            bars.push_back({g.grading, g.cs, ExtendedRational::infinity()});
        }
    }
    return Barcode(std::move(bars));
}

std::size_t sublevel_homology(const FilteredComplex& c, const Rational& r, int d) {
    const auto below = translates_in(c, d - 1, r);
    const auto here = translates_in(c, d, r);
    const auto above = translates_in(c, d + 1, r);
    const auto rank_out = gf2::rank(boundary_matrix(c, here, below));
    const auto rank_in = gf2::rank(boundary_matrix(c, above, here));
    return here.size() - rank_out - rank_in;
}

std::size_t direct_induced_rank(const FilteredComplex& c, const Rational& r, const Rational& r2, int d) {
    if (r2 < r) {
        throw std::invalid_argument("direct_induced_rank needs r <= r2");
    }
    const auto here_small = translates_in(c, d, r);
    const auto here = translates_in(c, d, r2);
    const auto below = translates_in(c, d - 1, r);
    const auto above = translates_in(c, d + 1, r2);

    std::map<std::pair<std::size_t, int>, std::size_t> slot;
    for (std::size_t i = 0; i < here.size(); ++i) {
        slot[{here[i].rep, here[i].shift}] = i;
    }
    std::vector<gf2::BitVector> columns;
    for (const auto& z : gf2::kernel_basis(boundary_matrix(c, here_small, below))) {
        gf2::BitVector v(here.size());
        for (std::size_t i = 0; i < here_small.size(); ++i) {
            if (z.get(i)) {
                v.set(slot.at({here_small[i].rep, here_small[i].shift}));
            }
        }
        columns.push_back(std::move(v));
    }
    const auto boundaries = boundary_matrix(c, above, here);
    const auto b_rank = gf2::rank(boundaries);
    for (const auto& col : boundaries.columns()) {
        columns.push_back(col);
    }
    return gf2::rank(gf2::BitMatrix::from_columns(columns, here.size())) - b_rank;
}

std::size_t connecting_rank(const Barcode& b, const Rational& r, const Rational& r2, int d) {
    if (r2 < r) {
        throw std::invalid_argument("connecting_rank needs r <= r2, got " + to_string(r) + " > " + to_string(r2));
    }
    std::size_t n = 0;
    for (const auto& bar : b.bars(d)) {
        n += (bar.contains(r) && bar.contains(r2)) ? 1 : 0;
    }
    return n;
}

std::vector<Rational> critical_values(const FilteredComplex& c, int d) {
    std::set<Rational> values;
    for (int e = d - 1; e <= d + 1; ++e) {
        for (const auto& g : c.generators()) {
            if ((e - g.grading) % 8 == 0) {
                values.insert(g.cs + (e - g.grading) / 8);
            }
        }
    }
    std::vector<Rational> out;
    out.push_back(values.empty() ? Rational(0) : *values.begin() - 1);
    out.insert(out.end(), values.begin(), values.end());
    return out;
}

}  // namespace ipmod
