#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "ipmod/errors.hpp"
#include "ipmod/ip_module.hpp"

using namespace ipmod;

namespace {

Rational q(std::int64_t p, std::int64_t d = 1) { return {p, d}; }

IPModule module_of(std::vector<Bar> bars) { return IPModule(Barcode(std::move(bars))); }

IPMorphismMeta meta(int degree, Rational level, std::vector<Slack> slack = {}) {
    IPMorphismMeta m;
    m.degree = degree;
    m.level_base = level;
    m.slack = std::move(slack);
    m.injective_all_degrees = true;
    return m;
}

}  // namespace

TEST_CASE("kappa and ell of the Poincare table") {
    const auto a = module_of({{1, q(1, 120)}, {5, q(49, 120)}});
    CHECK(kappa(a, 1) == ExtendedRational(q(1, 120)));
    CHECK(kappa(a, 5) == ExtendedRational(q(49, 120)));
    CHECK(kappa(a, 9) == ExtendedRational(q(121, 120)));
    CHECK(kappa(a, -7) == ExtendedRational(q(-119, 120)));
    CHECK(kappa(a, 2).is_positive_infinity());
    CHECK(ell(a) == ExtendedRational(q(-13, 60)));
    CHECK_FALSE(a.is_zero());
}

TEST_CASE("finite bars do not contribute to kappa") {
    const auto a = module_of({{0, q(1, 4), ExtendedRational(q(3, 4))}});
    CHECK(kappa(a, 0).is_positive_infinity());
    CHECK(ell(a).is_positive_infinity());
    CHECK(a.is_zero());
    CHECK(a.rank(q(1, 2), 0) == 1);
    CHECK(a.rank(q(1, 2), q(1), 0) == 0);
    CHECK(ell(IPModule()).is_positive_infinity());
}

TEST_CASE("kappa takes the least infinite birth") {
    const auto a = module_of({{3, q(2, 3)}, {3, q(1, 5)}, {3, q(0), ExtendedRational(q(1))}});
    CHECK(kappa(a, 3) == ExtendedRational(q(1, 5)));
    CHECK(a.rank_at_infinity(3) == 2);
    CHECK(ell(a) == ExtendedRational(q(1, 5) - q(3, 8)));
}

TEST_CASE("periodicity of kappa on random barcodes") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Bar> bars;
        const int n = gen::uniform(rng, 0, 6);
        for (int i = 0; i < n; ++i) {
            Bar b;
            b.degree = gen::uniform(rng, -10, 20);
            b.birth = q(gen::uniform(rng, -30, 30), 7);
            if (gen::coin(rng)) {
                b.death = ExtendedRational(b.birth + q(gen::uniform(rng, 1, 9), 5));
            }
            bars.push_back(b);
        }
        const auto a = module_of(bars);
        for (int d = -12; d <= 12; ++d) {
            const auto k = kappa(a, d);
            const auto k8 = kappa(a, d + 8);
            CHECK(k.is_finite() == k8.is_finite());
            if (k.is_finite()) {
                CHECK(k8.value() == k.value() + 1);
            }
        }
        CHECK(ell(a).is_positive_infinity() == a.is_zero());
    }
}

TEST_CASE("single-morphism bounds") {
    const auto f = meta(3, q(1, 4), {{"eta", true}});
    const auto strict = ell_bound_single(f, true);
    CHECK(strict.relation == Relation::lt);
    CHECK(strict.offset == q(-1, 8));
    CHECK(ell_bound_single(f, false).relation == Relation::le);
    CHECK(ell_bound_single(meta(0, q(0), {{"eta", false}}), true).relation == Relation::le);
    auto not_injective = f;
    not_injective.injective_all_degrees = false;
    CHECK_THROWS_AS(ell_bound_single(not_injective, true), hypothesis_error);
    CHECK(strict.evaluate(ExtendedRational(q(1))) == ExtendedRational(q(7, 8)));
    CHECK(strict.evaluate(ExtendedRational::infinity()).is_positive_infinity());
    CHECK(strict.holds(ExtendedRational(q(0)), ExtendedRational(q(1))));
    CHECK_FALSE(strict.holds(ExtendedRational(q(7, 8)), ExtendedRational(q(1))));
}

TEST_CASE("pair bounds take the larger offset") {
    const auto w = meta(0, q(0), {{"eta(W)", true}});
    const auto wc = meta(2, q(1, 4), {{"eta(W,c)", true}});
    const auto b = ell_bound_pair(w, wc, true, true);
    CHECK(b.offset == q(0));
    CHECK(b.relation == Relation::lt);
    const auto loose = meta(2, q(1, 4), {{"eta(W,c)", false}});
    CHECK(ell_bound_pair(w, loose, true, true).relation == Relation::le);
    const auto low = meta(8, q(1, 4));
    CHECK(ell_bound_pair(w, low, true, true).relation == Relation::lt);
    CHECK(ell_bound_pair(w, low, true, true).offset == q(0));
    CHECK_THROWS_AS(ell_bound_pair(w, wc, false, true), hypothesis_error);
}

TEST_CASE("composition adds degrees and levels") {
    auto f = meta(2, q(1, 4), {{"a", true}});
    auto g = meta(1, q(1, 8), {{"b", false}});
    const auto h = compose(f, g);
    CHECK(h.degree == 3);
    CHECK(h.level_base == q(3, 8));
    CHECK(h.slack.size() == 2);
    CHECK(h.has_strict_slack());
    CHECK(h.offset() == q(0));
    g.injective_all_degrees = false;
    CHECK_FALSE(compose(f, g).injective_all_degrees);
    CHECK(f.level_text() == "1/4 - a");
    CHECK(meta(0, q(0), {{"eta", true}}).level_text() == "-eta");
    CHECK(to_string(Relation::lt) == "<");
}
