#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "logtorelli/invariants.hpp"
#include "oracles.hpp"

using namespace logtorelli;

namespace {

GradedResolution res_of(std::vector<int> sources, std::vector<int> targets) {
    PolyMatrix m(static_cast<int>(targets.size()), static_cast<int>(sources.size()), 3, targets, sources);
    return {std::move(sources), std::move(targets), std::move(m)};
}

}  // namespace

TEST_CASE("chern data from twists") {
    ChernData two_conics = chern_from_resolution(res_of({-2, -2}, {-1, -1, -1, 0}), 2);
    CHECK(two_conics.chern_poly == std::vector<Int>{1, 1, 3});
    CHECK(two_conics.rank == 2);

    ChernData one_conic = chern_from_resolution(res_of({-2}, {-1, -1, -1}), 2);
    CHECK(one_conic.chern_class(1) == -1);
    CHECK(one_conic.chern_class(2) == 1);

    ChernData pair_p3 = chern_from_resolution(res_of({-2, -2}, {-1, -1, -1, -1, 0}), 3);
    CHECK(pair_p3.chern_class(3) == 4);

    CHECK_THROWS_AS(chern_from_resolution(res_of({-1, -1}, {0, 0}), 2), std::domain_error);
}

TEST_CASE("chern polynomial: twist shift moves c1 by the rank") {
    oracles::Rng rng(61);
    std::uniform_int_distribution<int> tw(-4, 1);
    for (int trial = 0; trial < 30; ++trial) {
        int k = 1 + trial % 3, n = 2 + trial % 3;
        std::vector<int> sources(k), targets(n + k);
        for (auto& a : sources) a = tw(rng.gen) - 2;
        for (auto& b : targets) b = tw(rng.gen);
        ChernData base = chern_from_resolution(res_of(sources, targets), n);
        std::vector<int> s1 = sources, t1 = targets;
        for (auto& a : s1) ++a;
        for (auto& b : t1) ++b;
        ChernData shifted = chern_from_resolution(res_of(s1, t1), n);
        CHECK(shifted.chern_class(1) == base.chern_class(1) + base.rank);
    }
}

TEST_CASE("slope stability from the twists") {
    StabilityVerdict pair = bohnhorst_spindler(res_of({-2, -2}, {-1, -1, -1, 0}), 2);
    CHECK(pair.stable);
    CHECK(pair.b1 == 0);
    CHECK(pair.mu == Rational(1, 2));

    StabilityVerdict one = bohnhorst_spindler(res_of({-2}, {-1, -1, -1}), 2);
    CHECK(one.stable);
    CHECK(one.reason == "b1 = ... = bn forces stability");

    // hyperplane + quadric: semistable exactly in the plane
    StabilityVerdict hq2 = bohnhorst_spindler(res_of({-2}, {-1, -1, 0}), 2);
    CHECK(hq2.semistable);
    CHECK_FALSE(hq2.stable);
    for (int n = 3; n <= 6; ++n) {
        std::vector<int> targets(n + 1, -1);
        targets.back() = 0;
        StabilityVerdict hq = bohnhorst_spindler(res_of({-2}, targets), n);
        CHECK_FALSE(hq.semistable);
        CHECK(hq.b1 == 0);
        CHECK(hq.mu == Rational(2 - n, n));
    }

    CHECK_THROWS_AS(bohnhorst_spindler(res_of({-2}, {-1, -1}), 2), std::invalid_argument);
}

TEST_CASE("stable implies semistable structurally") {
    oracles::Rng rng(62);
    std::uniform_int_distribution<int> tw(-3, 1);
    for (int trial = 0; trial < 50; ++trial) {
        int k = 1 + trial % 3, n = 2 + trial % 4;
        std::vector<int> sources(k), targets(n + k);
        for (auto& a : sources) a = tw(rng.gen) - 3;
        for (auto& b : targets) b = tw(rng.gen);
        StabilityVerdict v = bohnhorst_spindler(res_of(sources, targets), n);
        if (v.stable) CHECK(v.semistable);
    }
}

TEST_CASE("slope of planar conic arrangements: (2l-3)/2") {
    for (int l = 1; l <= 10; ++l) {
        std::vector<int> sources(l, -2);
        std::vector<int> targets{-1, -1, -1};
        for (int i = 0; i < l - 1; ++i) targets.push_back(0);
        ChernData cd = chern_from_resolution(res_of(sources, targets), 2);
        CHECK(cd.slope == Rational(2 * l - 3, 2));
        if (l >= 1) {
            StabilityVerdict v = bohnhorst_spindler(res_of(sources, targets), 2);
            CHECK(v.stable);
        }
    }
}

TEST_CASE("moduli dimensions in the plane") {
    CHECK(moduli_dimension(-1, 3) == 8);
    CHECK(moduli_dimension(0, 3) == 9);
    CHECK(moduli_dimension(-1, 2) == 4);
}
