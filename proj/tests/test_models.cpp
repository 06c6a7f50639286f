#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "occupancy/models.hpp"
#include "test_util.hpp"

using namespace occ;
using namespace occ::testutil;

namespace {

std::vector<ThetaMixture> test_mixtures() {
    return {ThetaMixture::single(Rational(1, 2)),
            ThetaMixture{{{Rational(1, 3), Rational(1, 4)}, {Rational(2, 3), Rational(3, 4)}}},
            ThetaMixture{{{Rational(1, 5), Rational(1, 3)},
                          {Rational(1, 2), Rational(1, 3)},
                          {Rational(4, 5), Rational(1, 3)}}}};
}

}  // namespace

TEST_CASE("realize matches the classical closed forms") {
    auto mb = realize(classical(Classical::MB, 2, 2));
    CHECK(mb.prob(comp({1, 1})) == Rational(1, 2));
    CHECK(mb.prob(comp({2, 0})) == Rational(1, 4));
    CHECK(mb.prob(comp({0, 2})) == Rational(1, 4));

    auto be = realize(classical(Classical::BE, 3, 2));
    CHECK(be.pmf.size() == 6);
    for (const auto& [x, p] : be.pmf) CHECK(p == Rational(1, 6));

    auto fd = realize(classical(Classical::FD, 4, 2));
    CHECK(fd.pmf.size() == 6);
    for (const auto& [x, p] : fd.pmf) {
        CHECK(p == Rational(1, 6));
        for (int xj : x) CHECK(xj <= 1);
    }
}

TEST_CASE("MB closed form on a grid: multinomial over n^r") {
    for (int n = 2; n <= 4; ++n)
        for (int r = 1; r <= 5; ++r) {
            auto m = realize(classical(Classical::MB, n, r));
            for (const auto& [x, p] : m.pmf) {
                Rational expected(factorial(r), pow_rational(Rational(n), r).convert_to<Int>());
                for (int xj : x) expected /= factorial(xj);
                CHECK(p == expected);
            }
        }
}

TEST_CASE("classical preset tables") {
    CHECK(classical(Classical::MB, 2, 3).a.values() ==
          std::vector<Rational>{1, 1, Rational(1, 2), Rational(1, 6)});
    CHECK(classical(Classical::BE, 5, 2).a.values() == std::vector<Rational>{1, 1, 1});
    CHECK_THROWS_AS(classical(Classical::FD, 3, 4), std::domain_error);

    auto fd_full = realize(classical(Classical::FD, 3, 3));
    REQUIRE(fd_full.pmf.size() == 1);
    CHECK(fd_full.prob(comp({1, 1, 1})) == 1);
}

TEST_CASE("realize reports infeasible weights") {
    CHECK_THROWS_AS(realize(MaSpec{fd_weights(2), 2, 4}), std::domain_error);
}

TEST_CASE("pseudo-contagious and multi-hypergeometric spot values") {
    auto pc = realize(pseudo_contagious(2, 2, 2));
    CHECK(pc.prob(comp({2, 0})) == Rational(3, 10));  // binom(3,2)/binom(5,2)
    CHECK(pc.prob(comp({1, 1})) == Rational(2, 5));

    auto mh = realize(multi_hypergeometric(2, 2, 2));
    CHECK(mh.prob(comp({1, 1})) == Rational(2, 3));  // binom(2,1)^2/binom(4,2)

    // s = 1 merge is the identity: pc collapses to BE.
    CHECK(same_pmf(realize(pseudo_contagious(3, 4, 1)), realize(classical(Classical::BE, 3, 4))));
    CHECK_THROWS_AS(multi_hypergeometric(2, 5, 2), std::domain_error);
}

TEST_CASE("pmf sums to exactly 1") {
    std::mt19937 rng(17);
    std::vector<MaSpec> specs{classical(Classical::MB, 3, 4), classical(Classical::BE, 4, 3),
                              classical(Classical::FD, 5, 3), pseudo_contagious(3, 4, 2),
                              MaSpec{random_positive_weights(rng, 5), 4, 5}};
    for (const auto& spec : specs) CHECK(realize(spec).total_mass() == 1);
}

TEST_CASE("exponential-family conditional equals realize for every mixture") {
    std::mt19937 rng(23);
    std::vector<WeightFunction> tables{mb_weights(6), be_weights(6), fd_weights(6),
                                       random_positive_weights(rng, 6)};
    for (const auto& a : tables)
        for (int n = 2; n <= 4; ++n)
            for (int r = 0; r <= 6; ++r) {
                if (norm_const(a, n, r) == 0) continue;
                auto expected = realize(MaSpec{a, n, r});
                for (const auto& mix : test_mixtures())
                    CHECK(same_pmf(exponential_family_conditional(a, mix, n, r), expected));
            }
}

TEST_CASE("exponential-family conditional spot values") {
    auto m = exponential_family_conditional(be_weights(2), ThetaMixture::single(Rational(1, 2)), 2, 2);
    for (const auto& [x, p] : m.pmf) CHECK(p == Rational(1, 3));

    auto single = exponential_family_conditional(mb_weights(1), ThetaMixture::single(Rational(1, 3)), 2, 1);
    CHECK(single.prob(comp({1, 0})) == Rational(1, 2));
}

TEST_CASE("mixture validation") {
    CHECK_THROWS_AS(ThetaMixture{}.validate(), std::domain_error);
    CHECK_THROWS_AS(ThetaMixture::single(Rational(3, 2)).validate(), std::domain_error);
    ThetaMixture bad{{{Rational(1, 2), Rational(1, 2)}, {Rational(1, 3), Rational(1, 3)}}};
    CHECK_THROWS_AS(bad.validate(), std::domain_error);
}

TEST_CASE("is_exchangeable") {
    CHECK(is_exchangeable(realize(classical(Classical::MB, 3, 3))));
    CHECK(is_exchangeable(realize(pseudo_contagious(3, 2, 2))));

    OccupancyModel skew{2, 2, {}};
    skew.pmf[comp({2, 0})] = Rational(1, 2);
    skew.pmf[comp({1, 1})] = Rational(1, 2);
    CHECK_FALSE(is_exchangeable(skew));
}

TEST_CASE("kappa identity: C equals a rescaled sum probability") {
    CHECK(kappa_identity_check(be_weights(4), 2, 2, Rational(1, 2)));
    CHECK(kappa_identity_check(mb_weights(6), 3, 4, Rational(1, 4)));
    CHECK(kappa_identity_check(fd_weights(3), 4, 0, Rational(1, 3)));

    std::mt19937 rng(31);
    auto a = random_positive_weights(rng, 5);
    for (int n = 1; n <= 3; ++n)
        for (int r = 0; r <= 5; ++r)
            CHECK(kappa_identity_check(a, n, r, Rational(2, 7)));
}
