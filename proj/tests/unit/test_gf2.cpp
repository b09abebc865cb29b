#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "ipmod/gf2.hpp"
#include "oracles.hpp"

using ipmod::gf2::BitMatrix;
using ipmod::gf2::BitVector;
namespace gf2 = ipmod::gf2;

TEST_CASE("bit vector basics") {
    BitVector v(70);
    CHECK(v.is_zero());
    v.set(3);
    v.set(69);
    CHECK(v.popcount() == 2);
    CHECK(v.first_set() == 3);
    CHECK(v.last_set() == 69);
    v.flip(3);
    CHECK(v.first_set() == 69);
    const auto u = BitVector::unit(70, 69);
    CHECK(u == v);
    CHECK(u.dot(v));
    CHECK((u ^ v).is_zero());
    CHECK(BitVector(5).first_set() == 5);
}

TEST_CASE("matrix construction and products") {
    const auto a = BitMatrix::from_strings({"110", "011"});
    CHECK(a.rows() == 2);
    CHECK(a.cols() == 3);
    CHECK(a.get(0, 1));
    CHECK_FALSE(a.get(1, 0));
    CHECK(a.transpose().transpose() == a);
    const auto i3 = BitMatrix::identity(3);
    CHECK(a * i3 == a);
    const auto sq = a * a.transpose();
    CHECK(sq == BitMatrix::from_strings({"01", "10"}));
    CHECK((a + a).is_zero());
    CHECK(BitMatrix(0, 4).empty());
}

TEST_CASE("rank agrees with the span-counting oracle") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const auto rows = static_cast<std::size_t>(gen::uniform(rng, 0, 9));
        const auto cols = static_cast<std::size_t>(gen::uniform(rng, 0, 10));
        const auto m = gen::matrix(rng, rows, cols, trial % 3 == 0 ? 0.2 : 0.5);
        CHECK(gf2::rank(m) == oracle::span_rank(oracle::columns_of(m)));
    }
}

TEST_CASE("kernel basis spans the null space") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        const auto m = gen::matrix(rng, static_cast<std::size_t>(gen::uniform(rng, 1, 8)),
                                   static_cast<std::size_t>(gen::uniform(rng, 1, 10)));
        const auto ker = gf2::kernel_basis(m);
        CHECK(ker.size() == m.cols() - gf2::rank(m));
        for (const auto& v : ker) {
            CHECK(m.apply(v).is_zero());
        }
        CHECK(gf2::rank(BitMatrix::from_columns(ker, m.cols())) == ker.size());
    }
}

TEST_CASE("solve and inverse") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        const auto n = static_cast<std::size_t>(gen::uniform(rng, 1, 8));
        const auto m = gen::matrix(rng, n, n);
        const auto inv = gf2::inverse(m);
        CHECK(inv.has_value() == (gf2::rank(m) == n));
        if (inv) {
            CHECK(m * *inv == BitMatrix::identity(n));
            CHECK(*inv * m == BitMatrix::identity(n));
        }
        BitVector x(n);
        for (std::size_t i = 0; i < n; ++i) {
            x.set(i, gen::coin(rng));
        }
        const auto b = m.apply(x);
        const auto sol = gf2::solve(m, b);
        REQUIRE(sol.has_value());
        CHECK(m.apply(*sol) == b);
    }
    CHECK_FALSE(gf2::solve(BitMatrix::from_strings({"10", "10"}), BitMatrix::from_strings({"1", "0"}).column(0)));
}

TEST_CASE("rref is reduced and preserves the row space") {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 100; ++trial) {
        const auto m = gen::matrix(rng, 6, 7);
        const auto e = gf2::rref(m);
        CHECK(e.rank() == gf2::rank(m));
        for (std::size_t r = 0; r < e.rank(); ++r) {
            for (std::size_t other = 0; other < e.reduced.rows(); ++other) {
                CHECK(e.reduced.get(other, e.pivot_columns[r]) == (other == r));
            }
        }
        auto stacked = oracle::columns_of(m.transpose());
        const auto reduced = oracle::columns_of(e.reduced.transpose());
        stacked.insert(stacked.end(), reduced.begin(), reduced.end());
        CHECK(oracle::xor_rank(stacked) == e.rank());
    }
}

TEST_CASE("column space basis") {
    const auto m = BitMatrix::from_strings({"101", "011", "110"});
    const auto basis = gf2::column_space_basis(m);
    CHECK(basis.size() == 2);
}
