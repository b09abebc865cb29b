#include <doctest.h>

#include "ipmod/cobordism.hpp"
#include "ipmod/errors.hpp"

using namespace ipmod;

TEST_CASE("degree and level of surgery cobordisms") {
    CobordismTopology t;
    t.simply_connected = true;
    auto m = degree_level(t);
    CHECK(m.degree == 0);
    CHECK(m.level_base == Rational(0));
    CHECK(m.has_strict_slack());
    t.c_squared = -1;
    m = degree_level(t);
    CHECK(m.degree == 2);
    CHECK(m.level_base == Rational(1, 4));
    t.family_dim = 1;
    t.slack_name = "eta(K)";
    m = degree_level(t);
    CHECK(m.degree == 3);
    CHECK(m.level_text() == "1/4 - eta(K)");
    t.simply_connected = false;
    CHECK_FALSE(degree_level(t).has_strict_slack());
}

TEST_CASE("degree and level hypotheses") {
    CobordismTopology t;
    t.b1 = 1;
    CHECK_THROWS_AS(degree_level(t), hypothesis_error);
    t.b1 = 0;
    t.bplus = 1;
    CHECK_THROWS_AS(degree_level(t), hypothesis_error);
    t.bplus = 0;
    t.c_squared = Rational(-1, 4);
    CHECK_THROWS_AS(degree_level(t), std::invalid_argument);
}

TEST_CASE("energy and index bookkeeping") {
    CHECK(energy_relation(Rational(-1), Rational(1, 120), Rational(49, 120)) == Rational(1, 4) - Rational(48, 120));
    CHECK(index_additivity(5, Rational(-1), 1) == 6);
    CHECK(index_additivity(1, Rational(0), 1) == 0);
    CHECK_THROWS(index_additivity(0, Rational(1, 3), 0));
}

TEST_CASE("index with middle ends") {
    CHECK(stabilizer_dim(FlatLimit::central) == 3);
    CHECK(stabilizer_dim(FlatLimit::abelian) == 1);
    CHECK(stabilizer_dim(FlatLimit::irreducible) == 0);
    CHECK(asd_index(Rational(1), 0, {FlatLimit::central, FlatLimit::central, FlatLimit::abelian}) == Rational(-1));
    CHECK(asd_index(Rational(0), 1, {FlatLimit::abelian}) == Rational(-5));
    CHECK(asd_index(Rational(0), 0, {}) == Rational(-3));
    CHECK_THROWS_AS(asd_index(Rational(0), 0, {FlatLimit::irreducible}), std::invalid_argument);
}

TEST_CASE("reducibles on the negative-definite piece") {
    const auto t = reducibles_on_N(Rational(-1, 2), 1, 10);
    REQUIRE(t.rows.size() == 10);
    CHECK(t.rows[t.minimum].n == 1);
    CHECK(t.unique_minimum);
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        const int n = t.rows[i].n;
        CHECK(t.rows[i].e8 == Rational((2 * n - 1) * (2 * n - 1)));
        CHECK(t.rows[i].index == Rational((2 * n - 1) * (2 * n - 1) - 2));
    }
    const auto wide = reducibles_on_N(Rational(-1, 2), -3, 4);
    CHECK_FALSE(wide.unique_minimum);
    CHECK(wide.rows[wide.minimum].index == Rational(-1));
    CHECK(reducibles_on_N(Rational(-1, 2), 2, 1).rows.empty());
}

TEST_CASE("broken-trajectory index bounds") {
    CHECK(broken_index_bound(Scenario::irreducible_pieces_reducible_limit, 1).bound == 1);
    CHECK(broken_index_bound(Scenario::irreducible_pieces_reducible_limit, 2).bound == 0);
    CHECK(broken_index_bound(Scenario::reducible_unbroken_bplus0).bound == -3);
    CHECK(broken_index_bound(Scenario::reducible_unbroken_bplus1_rp3).bound == -4);
    CHECK(broken_index_bound(Scenario::reducible_unbroken_bplus1_rp3).strict_sum);
    CHECK(broken_index_bound(Scenario::reducible_unbroken).bound == -4);
    CHECK(broken_index_bound(Scenario::reducible_glued_to_cylinders).bound == 4);
    CHECK(broken_index_bound(Scenario::intermediate_reducible_limit).bound == 1);
    CHECK(broken_index_bound(Scenario::intermediate_one_reducible).bound == 3);
    CHECK(broken_index_bound(Scenario::intermediate_both_reducible).bound == 3);
    CHECK(broken_index_bound(Scenario::intermediate_split).bound == 1);
    CHECK(broken_index_bound(Scenario::middle_end_s3).bound == 2);
    CHECK(broken_index_bound(Scenario::middle_end_rp3).bound == 0);
    CHECK(broken_index_bound(Scenario::middle_end_reducible_piece).bound == 4);
    CHECK(broken_index_bound(Scenario::pentagon_interior).bound == -2);
    CHECK(broken_index_bound(Scenario::pentagon_s3_face).bound == 1);
    CHECK(broken_index_bound(Scenario::pentagon_intermediate_face).bound == -1);
    CHECK(broken_index_bound(Scenario::pentagon_rp3_face).bound == -1);
    CHECK(broken_index_bound(Scenario::pentagon_s2xs1_face).bound == -1);
    CHECK_THROWS(broken_index_bound(Scenario::irreducible_pieces_reducible_limit, -1));
}

TEST_CASE("bounds equal the sum of their terms") {
    for (auto s : all_scenarios()) {
        const auto b = broken_index_bound(s);
        int sum = 0;
        for (const auto& t : b.terms) {
            sum += t.value;
        }
        CHECK(b.bound == sum + (b.strict_sum ? 1 : 0));
        CHECK(parse_scenario(to_string(s)) == s);
    }
    CHECK(all_scenarios().size() == 17);
    CHECK_THROWS_AS(parse_scenario("nope"), std::invalid_argument);
}
