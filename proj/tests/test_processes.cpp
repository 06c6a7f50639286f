#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "occupancy/processes.hpp"
#include "test_util.hpp"

using namespace occ;
using namespace occ::testutil;

namespace {

MixedGeometricSpec make_spec(WeightFunction a, ThetaMixture mix, int horizon = 3) {
    return MixedGeometricSpec{std::move(a), std::move(mix), horizon};
}

ThetaMixture two_component() {
    return ThetaMixture{{{Rational(1, 3), Rational(2, 5)}, {Rational(3, 5), Rational(3, 5)}}};
}

}  // namespace

TEST_CASE("joint jump law is a probability distribution with the product form") {
    auto spec = make_spec(be_weights(3), ThetaMixture::single(Rational(1, 2)));
    auto law = joint_jump_law(spec, 1);
    Rational total = 0;
    for (const auto& [jumps, p] : law) total += p;
    CHECK(total == 1);

    // Single geometric component: p_1(j0,j1) proportional to (1/2)^(j0+j1).
    Rational base = law.at(comp({0, 0}));
    for (const auto& [jumps, p] : law)
        CHECK(p == base * pow_rational(Rational(1, 2), jumps[0] + jumps[1]));
}

TEST_CASE("horizon-zero law is the mixture marginal") {
    auto spec = make_spec(mb_weights(4), two_component());
    auto law = joint_jump_law(spec, 0);
    Rational total = 0;
    for (const auto& [jumps, p] : law) total += p;
    CHECK(total == 1);
    // Marginal is decreasing in the jump size for MB weights with t < 1.
    CHECK(law.at(comp({0})) > law.at(comp({1})));
}

TEST_CASE("two-component mixture keeps the R_t * product-of-a factorization") {
    auto spec = make_spec(mb_weights(3), two_component());
    auto law = joint_jump_law(spec, 1);
    // p(j0,j1) / (a(j0) a(j1)) depends only on the total j0 + j1: the residual
    // factor R_t is a function of the number of jumps alone.
    auto ratio = [&](int x, int y) { return law.at(comp({x, y})) / (spec.a.at(x) * spec.a.at(y)); };
    CHECK(ratio(1, 2) == ratio(2, 1));
    CHECK(ratio(1, 2) == ratio(0, 3));
    CHECK(ratio(1, 2) == ratio(3, 0));
    CHECK(ratio(1, 1) == ratio(0, 2));
    CHECK(ratio(2, 2) == ratio(1, 3));
}

TEST_CASE("mixed geometric processes satisfy the UOSP at desk scale") {
    std::mt19937 rng(71);
    auto random_a = gauge_canonicalize(random_positive_weights(rng, 5));
    std::vector<WeightFunction> tables{gauge_canonicalize(fd_weights(5)),
                                       gauge_canonicalize(mb_weights(5)), be_weights(5), random_a};
    for (const auto& a : tables)
        for (const auto& mix : {ThetaMixture::single(Rational(1, 2)), two_component()})
            for (int t = 0; t <= 3; ++t)
                for (int k = 0; k <= 5; ++k) {
                    if (norm_const(a, t + 1, k) == 0) continue;
                    CHECK(verify_uosp(make_spec(a, mix), t, k));
                }
}

TEST_CASE("conditional law does not depend on the mixture") {
    auto a = be_weights(5);
    CHECK(verify_uosp(make_spec(a, ThetaMixture::single(Rational(1, 7))), 2, 3));
    CHECK(verify_uosp(make_spec(a, two_component()), 2, 3));
}

TEST_CASE("a corrupted joint law fails the UOSP check") {
    auto spec = make_spec(be_weights(4), ThetaMixture::single(Rational(1, 2)));
    auto law = joint_jump_law(spec, 2);
    // Move mass between two tuples with the same total; the product form breaks.
    Rational delta = law.at(comp({2, 0, 0})) / 2;
    law.at(comp({2, 0, 0})) -= delta;
    law.at(comp({0, 2, 0})) += delta;
    CHECK_FALSE(verify_uosp_law(law, spec.a, 2, 2));
    // Untouched totals still pass.
    CHECK(verify_uosp_law(law, spec.a, 2, 1));
}

TEST_CASE("validation of the process spec") {
    // a(0) must be 1.
    MixedGeometricSpec bad{WeightFunction({2, 1}), ThetaMixture::single(Rational(1, 2)), 2};
    CHECK_THROWS_AS(bad.validate(), std::domain_error);
    CHECK_THROWS_AS(joint_jump_law(bad, 1), std::domain_error);

    auto spec = make_spec(be_weights(2), ThetaMixture::single(Rational(1, 2)), 2);
    CHECK_THROWS_AS(joint_jump_law(spec, 5), std::domain_error);
    // k = 0 conditions on the all-zero tuple.
    CHECK(verify_uosp(spec, 2, 0));
}
