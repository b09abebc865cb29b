#pragma once

// Seeded random inputs for property tests.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ipmod/gf2.hpp"
#include "ipmod/persistence.hpp"

namespace gen {

inline int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
inline bool coin(std::mt19937_64& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

inline ipmod::gf2::BitMatrix matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, double density = 0.5) {
    ipmod::gf2::BitMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            if (coin(rng, density)) {
                m.set(r, c);
            }
        }
    }
    return m;
}

/// Strictly filtered complex with d^2 = 0: a random elementary pairing conjugated by a random
/// grading-preserving unitriangular change of basis.
inline ipmod::FilteredComplex filtered_complex(std::mt19937_64& rng, std::size_t max_gens) {
    const auto n = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(max_gens)));
    std::vector<ipmod::FlatGenerator> gens;
    for (std::size_t i = 0; i < n; ++i) {
        gens.push_back({"g" + std::to_string(i), uniform(rng, -4, 12), ipmod::Rational(uniform(rng, 0, 47), 12)});
    }
    // e[i] = column mask of the elementary differential.
    std::vector<std::uint64_t> e(n, 0);
    std::vector<bool> used(n, false);
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) {
        order[i] = i;
    }
    std::shuffle(order.begin(), order.end(), rng);
    for (auto i : order) {
        if (used[i] || !coin(rng, 0.6)) {
            continue;
        }
        for (auto j : order) {
            if (!used[j] && j != i && gens[j].grading == gens[i].grading - 1 && gens[j].cs < gens[i].cs) {
                used[i] = used[j] = true;
                e[i] = std::uint64_t{1} << j;
                break;
            }
        }
    }
    // p[i] = e_i + random lower terms of the same grading; q = p^{-1}.
    std::vector<std::uint64_t> p(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        p[i] = std::uint64_t{1} << i;
        for (std::size_t j = 0; j < n; ++j) {
            if (gens[j].grading == gens[i].grading && gens[j].cs < gens[i].cs && coin(rng, 0.3)) {
                p[i] |= std::uint64_t{1} << j;
            }
        }
    }
    auto apply = [&](const std::vector<std::uint64_t>& m, std::uint64_t v) {
        std::uint64_t out = 0;
        for (std::size_t c = 0; c < n; ++c) {
            if ((v >> c) & 1U) {
                out ^= m[c];
            }
        }
        return out;
    };
    // Gauss-Jordan on [p | I] by columns.
    std::vector<std::uint64_t> work = p;
    std::vector<std::uint64_t> q(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        q[i] = std::uint64_t{1} << i;
    }
    for (std::size_t row = 0; row < n; ++row) {
        std::size_t pivot = row;
        while (((work[pivot] >> row) & 1U) == 0) {
            ++pivot;
        }
        std::swap(work[pivot], work[row]);
        std::swap(q[pivot], q[row]);
        for (std::size_t c = 0; c < n; ++c) {
            if (c != row && ((work[c] >> row) & 1U)) {
                work[c] ^= work[row];
                q[c] ^= q[row];
            }
        }
    }
    std::vector<std::pair<std::string, std::string>> pairs;
    for (std::size_t i = 0; i < n; ++i) {
        const auto col = apply(p, apply(e, q[i]));
        for (std::size_t j = 0; j < n; ++j) {
            if ((col >> j) & 1U) {
                pairs.emplace_back(gens[i].label, gens[j].label);
            }
        }
    }
    std::shuffle(gens.begin(), gens.end(), rng);
    return ipmod::FilteredComplex(gens, pairs);
}

}  // namespace gen
