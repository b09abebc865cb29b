#pragma once

// Brute-force reference computations, written against plain bitmasks so they share no code
// with the library's linear algebra.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "ipmod/chain_complex.hpp"
#include "ipmod/persistence.hpp"

namespace oracle {

/// A matrix with at most 64 rows stored as one bitmask per column.
using Columns = std::vector<std::uint64_t>;

inline std::size_t xor_rank(const Columns& cols) {
    std::array<std::uint64_t, 64> basis{};
    std::size_t r = 0;
    for (auto v : cols) {
        for (int b = 63; b >= 0 && v != 0; --b) {
            if (((v >> b) & 1U) == 0) {
                continue;
            }
            if (basis[static_cast<std::size_t>(b)] == 0) {
                basis[static_cast<std::size_t>(b)] = v;
                ++r;
                break;
            }
            v ^= basis[static_cast<std::size_t>(b)];
        }
    }
    return r;
}

/// Rank as log2 of the number of distinct subset sums of the columns (at most 20 columns).
inline std::size_t span_rank(const Columns& cols) {
    std::set<std::uint64_t> span;
    const std::size_t n = cols.size();
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        std::uint64_t v = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if ((s >> i) & 1U) {
                v ^= cols[i];
            }
        }
        span.insert(v);
    }
    std::size_t r = 0;
    while ((std::size_t{1} << r) < span.size()) {
        ++r;
    }
    return r;
}

inline Columns columns_of(const ipmod::gf2::BitMatrix& m) {
    Columns out(m.cols(), 0);
    for (std::size_t c = 0; c < m.cols(); ++c) {
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (m.get(r, c)) {
                out[c] |= std::uint64_t{1} << r;
            }
        }
    }
    return out;
}

inline std::uint64_t apply(const Columns& m, std::uint64_t v) {
    std::uint64_t out = 0;
    for (std::size_t c = 0; c < m.size(); ++c) {
        if ((v >> c) & 1U) {
            out ^= m[c];
        }
    }
    return out;
}

/// All cycles in degree n, found by enumerating every vector of C_n (dim at most 16).
inline std::vector<std::uint64_t> cycles(const ipmod::chain::GradedComplex& c, int n) {
    const auto d = columns_of(c.differential(n));
    std::vector<std::uint64_t> out;
    const auto dim = c.dim(n);
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << dim); ++v) {
        if (apply(d, v) == 0) {
            out.push_back(v);
        }
    }
    return out;
}

inline std::size_t log2_exact(std::size_t count) {
    std::size_t r = 0;
    while ((std::size_t{1} << r) < count) {
        ++r;
    }
    return r;
}

/// dim H_n by counting cycles and boundaries.
inline std::size_t homology_dim(const ipmod::chain::GradedComplex& c, int n) {
    const auto z = log2_exact(cycles(c, n).size());
    const auto b = xor_rank(columns_of(c.differential(n + 1)));
    return z - b;
}

/// Rank of f_*: H_n(A) -> H_{n+a}(B) as dim(f(Z_n) + B_{n+a}) - dim(B_{n+a}).
inline std::size_t induced_rank(const ipmod::chain::ChainMap& f, int n) {
    const auto fm = columns_of(ipmod::chain::block(f.map, f.source, f.target, n));
    const auto bd = columns_of(f.target.differential(n + f.map.degree + 1));
    Columns both = bd;
    for (auto z : cycles(f.source, n)) {
        both.push_back(apply(fm, z));
    }
    return xor_rank(both) - xor_rank(bd);
}

/// Translates t^k x of a filtered complex in one grading, optionally cut at cs <= r.
struct Cell {
    std::size_t gen;
    int k;
    ipmod::Rational cs;
};

inline std::vector<Cell> cells(const ipmod::FilteredComplex& c, int grading, std::optional<ipmod::Rational> r) {
    std::vector<Cell> out;
    const auto& gens = c.generators();
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const int diff = grading - gens[i].grading;
        if (((diff % 8) + 8) % 8 != 0) {
            continue;
        }
        const int k = (diff - ((diff % 8) + 8) % 8) / 8;
        const auto cs = gens[i].cs + k;
        if (r && cs > *r) {
            continue;
        }
        out.push_back({i, k, cs});
    }
    return out;
}

inline Columns boundary(const ipmod::FilteredComplex& c, const std::vector<Cell>& src, const std::vector<Cell>& tgt) {
    std::map<std::pair<std::size_t, int>, std::size_t> row;
    for (std::size_t i = 0; i < tgt.size(); ++i) {
        row[{tgt[i].gen, tgt[i].k}] = i;
    }
    Columns out;
    for (const auto& s : src) {
        std::uint64_t col = 0;
        for (auto t : c.targets(s.gen)) {
            const auto it = row.find({t, s.k});
            if (it != row.end()) {
                col ^= std::uint64_t{1} << it->second;
            }
        }
        out.push_back(col);
    }
    return out;
}

/// dim H_d of the sublevel complex cs <= r (r = nullopt means the whole complex).
inline std::size_t sublevel_dim(const ipmod::FilteredComplex& c, std::optional<ipmod::Rational> r, int d) {
    const auto below = cells(c, d - 1, r);
    const auto here = cells(c, d, r);
    const auto above = cells(c, d + 1, r);
    return here.size() - xor_rank(boundary(c, here, below)) - xor_rank(boundary(c, above, here));
}

/// Rank of H_d(F_r) -> H_d(F_r2) as dim Z_r - dim B_r2 + rank of B_r2 restricted to cells above r.
inline std::size_t sublevel_map_rank(const ipmod::FilteredComplex& c, const ipmod::Rational& r,
                                     const ipmod::Rational& r2, int d) {
    const auto here_r = cells(c, d, r);
    const auto z = here_r.size() - xor_rank(boundary(c, here_r, cells(c, d - 1, r)));
    const auto here_r2 = cells(c, d, r2);
    const auto b = boundary(c, cells(c, d + 1, r2), here_r2);
    std::uint64_t above_mask = 0;
    for (std::size_t i = 0; i < here_r2.size(); ++i) {
        if (here_r2[i].cs > r) {
            above_mask |= std::uint64_t{1} << i;
        }
    }
    Columns projected;
    for (auto col : b) {
        projected.push_back(col & above_mask);
    }
    return z - xor_rank(b) + xor_rank(projected);
}

/// Filtration values of cells in gradings d-1, d, d+1.
inline std::vector<ipmod::Rational> levels(const ipmod::FilteredComplex& c, int d) {
    std::set<ipmod::Rational> s;
    for (int g = d - 1; g <= d + 1; ++g) {
        for (const auto& cell : cells(c, g, std::nullopt)) {
            s.insert(cell.cs);
        }
    }
    return {s.begin(), s.end()};
}

}  // namespace oracle
