#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "ipmod/chain_complex.hpp"
#include "ipmod/triangle.hpp"
#include "oracles.hpp"

using namespace ipmod::chain;
using ipmod::random_complex;

namespace {

GradedComplex two_term(int period) {
    // F in degrees 0, 1, 2 with d_1 an isomorphism: homology F in degree 2.
    GradedComplex c(period);
    c.set_dim(0, 1);
    c.set_dim(1, 1);
    c.set_dim(2, 1);
    c.set_differential(1, BitMatrix::identity(1));
    return c;
}

GradedMap random_chain_map(std::mt19937_64& rng, const GradedComplex& a, const GradedComplex& b, int degree) {
    auto out = zero_map(degree);
    for (const auto& m : chain_map_basis(a, b, degree)) {
        if (gen::coin(rng)) {
            out = add(out, m, a, b);
        }
    }
    return out;
}

}  // namespace

TEST_CASE("degrees normalize modulo the period") {
    GradedComplex c(8);
    c.set_dim(9, 2);
    CHECK(c.dim(1) == 2);
    CHECK(c.dim(-7) == 2);
    CHECK(c.normalize(-1) == 7);
    GradedComplex z(0);
    z.set_dim(-3, 1);
    CHECK(z.dim(-3) == 1);
    CHECK(z.support() == std::vector<int>{-3});
}

TEST_CASE("malformed differentials are rejected") {
    GradedComplex c(0);
    c.set_dim(0, 1);
    c.set_dim(1, 2);
    CHECK_THROWS_AS(c.set_differential(1, BitMatrix(2, 2)), chain_error);
    GradedComplex d(0);
    d.set_dim(0, 1);
    d.set_dim(1, 1);
    d.set_dim(2, 1);
    d.set_differential(1, BitMatrix::identity(1));
    d.set_differential(2, BitMatrix::identity(1));
    CHECK_THROWS_AS(d.validate(), chain_error);
}

TEST_CASE("homology of small complexes") {
    const auto c = two_term(0);
    CHECK(homology(c, 0).dimension == 0);
    CHECK(homology(c, 1).dimension == 0);
    CHECK(homology(c, 2).dimension == 1);
    GradedComplex p1(1);
    p1.set_dim(0, 2);
    auto d = BitMatrix(2, 2);
    d.set(1, 0);
    p1.set_differential(0, d);
    CHECK(homology(p1, 0).dimension == 0);
}

TEST_CASE("homology dimensions agree with the enumeration oracle") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 150; ++trial) {
        const int period = std::vector<int>{0, 1, 2, 4, 8}[static_cast<std::size_t>(trial % 5)];
        const auto c = random_complex(rng, period, 10);
        c.validate();
        for (const auto& [n, dim] : homology_dims(c)) {
            CHECK(dim == oracle::homology_dim(c, n));
            const auto h = homology(c, n);
            for (std::size_t k = 0; k < h.dimension; ++k) {
                CHECK(c.differential(n).apply(h.representative(k)).is_zero());
                auto coords = h.coordinates(h.representative(k));
                CHECK(coords == ipmod::gf2::BitVector::unit(h.dimension, k));
            }
        }
    }
}

TEST_CASE("induced maps agree with the enumeration oracle") {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 100; ++trial) {
        const int period = trial % 2 == 0 ? 4 : 0;
        const auto a = random_complex(rng, period, 8);
        const auto b = random_complex(rng, period, 8);
        const int degree = gen::uniform(rng, -1, 1);
        const ChainMap f{a, b, random_chain_map(rng, a, b, degree)};
        CHECK_FALSE(chain_map_violation(f).has_value());
        for (const auto& [n, dim] : homology_dims(a)) {
            CHECK(ipmod::gf2::rank(induced_map(f, n)) == oracle::induced_rank(f, n));
        }
    }
}

TEST_CASE("identity induces the identity and composition is functorial") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        const auto a = random_complex(rng, 8, 8);
        const ChainMap id{a, a, identity_map(a)};
        for (const auto& [n, dim] : homology_dims(a)) {
            CHECK(induced_map(id, n) == BitMatrix::identity(dim));
        }
        const auto b = random_complex(rng, 8, 8);
        const auto c = random_complex(rng, 8, 8);
        const auto f = random_chain_map(rng, a, b, 0);
        const auto g = random_chain_map(rng, b, c, 1);
        const ChainMap gf{a, c, compose(g, f, a, b, c)};
        for (const auto& [n, dim] : homology_dims(a)) {
            CHECK(induced_map(gf, n) == induced_map({b, c, g}, n) * induced_map({a, b, f}, n));
        }
    }
}

TEST_CASE("cone of a quasi-isomorphism is acyclic and cones obey the long exact sequence") {
    std::mt19937_64 rng(24);
    for (int trial = 0; trial < 60; ++trial) {
        const int period = trial % 3 == 0 ? 0 : 8;
        const auto a = random_complex(rng, period, 8);
        const auto k = cone({a, a, identity_map(a)});
        for (const auto& [n, dim] : homology_dims(k)) {
            CHECK(dim == 0);
        }
        const auto b = random_complex(rng, period, 8);
        const ChainMap f{a, b, random_chain_map(rng, a, b, 0)};
        const auto c = cone(f);
        c.validate();
        CHECK(c.total_dim() == a.total_dim() + b.total_dim());
        // Exactness at the cone: dim H_n(Cone) = dim coker f_* (into H_{n+1} B) + dim ker f_* (on H_n A).
        for (const auto& [n, dim] : homology_dims(c)) {
            const auto hb = homology(b, n + 1).dimension;
            const auto ha = homology(a, n).dimension;
            const auto r_in = ipmod::gf2::rank(induced_map(f, n + 1));
            const auto r_out = ipmod::gf2::rank(induced_map(f, n));
            CHECK(dim == (hb - r_in) + (ha - r_out));
        }
        CHECK_FALSE(chain_map_violation({b, c, cone_inclusion(f)}).has_value());
        CHECK_FALSE(chain_map_violation({c, a, cone_projection(f)}).has_value());
    }
}

TEST_CASE("null-homotopies are found exactly for null-homotopic maps") {
    std::mt19937_64 rng(25);
    for (int trial = 0; trial < 60; ++trial) {
        const auto a = random_complex(rng, 4, 8);
        const auto b = random_complex(rng, 4, 8);
        GradedMap k;
        k.degree = 1;
        for (int n : a.support()) {
            if (b.dim(n + 1) > 0) {
                k.blocks[n] = gen::matrix(rng, b.dim(n + 1), a.dim(n));
            }
        }
        const auto r = boundary_of(k, a, b);
        const auto found = find_nullhomotopy(a, b, r);
        REQUIRE(found.has_value());
        CHECK(equal(boundary_of(*found, a, b), r, a, b));
    }
    const auto c = two_term(0);
    GradedComplex pt(0);
    pt.set_dim(2, 1);
    GradedMap id_top;
    id_top.blocks[2] = BitMatrix::identity(1);
    CHECK_FALSE(find_nullhomotopy(c, pt, id_top).has_value());
}

TEST_CASE("collapse and direct sum") {
    std::mt19937_64 rng(26);
    for (int trial = 0; trial < 30; ++trial) {
        const auto a = random_complex(rng, 8, 10);
        const auto c4 = collapse(a, 4);
        c4.validate();
        for (int n = 0; n < 4; ++n) {
            CHECK(c4.dim(n) == a.dim(n) + a.dim(n + 4));
        }
        const auto b = random_complex(rng, 8, 6);
        const auto s = direct_sum(a, b);
        for (int n = 0; n < 8; ++n) {
            CHECK(homology(s, n).dimension == homology(a, n).dimension + homology(b, n).dimension);
        }
    }
}

TEST_CASE("shape mismatches in maps are reported") {
    const auto c = two_term(0);
    GradedMap bad;
    bad.blocks[0] = BitMatrix(2, 1);
    CHECK_THROWS_AS(check_shapes(bad, c, c), chain_error);
    GradedMap not_chain;
    not_chain.blocks[1] = BitMatrix::identity(1);
    CHECK(chain_map_violation({c, c, not_chain}).has_value());
    CHECK_THROWS(cone({c, c, not_chain}));
}
