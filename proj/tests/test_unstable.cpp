#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "logtorelli/unstable.hpp"
#include "oracles.hpp"

using namespace logtorelli;

namespace {

Member line_member(std::vector<Rational> c) { return {1, HomPoly::linear_form(c), ""}; }
Member conic_member(const QuadricForm& q) { return {2, q.polynomial(), ""}; }

std::vector<Rational> rv(std::initializer_list<int> v) {
    std::vector<Rational> c;
    for (int x : v) c.push_back(Rational(x));
    return c;
}

HyperplaneCovec tangent_line(int t) { return HyperplaneCovec(rv({t * t, -2 * t, 1})); }

Arrangement six_generic_lines() {
    return Arrangement(2, {line_member(rv({5, 8, 5})), line_member(rv({5, 7, 9})), line_member(rv({-3, -4, 7})),
                           line_member(rv({6, -4, -6})), line_member(rv({5, 0, -5})), line_member(rv({-7, 8, -8}))});
}

}  // namespace

TEST_CASE("members of a generic arrangement are unstable, outsiders are not") {
    Arrangement arr = six_generic_lines();
    REQUIRE(check_nc_hyperplanes(arr).holds());
    SteinerData sd = build_steiner(arr);
    for (int i = 0; i < 6; ++i) {
        auto [unstable, kdim] = is_unstable_hyperplane(sd, arr.covector(i));
        CHECK(unstable);
        CHECK(kdim >= 1);
        // the kernel dimension is re-checkable against the exact matrix
        RatMatrix m = unstable_hyperplane_matrix(sd, arr.covector(i));
        CHECK(m.cols() - rank(m) == kdim);
    }
    for (auto out : {rv({1, 2, 3}), rv({1, 0, 7}), rv({2, -3, 11}), rv({9, 9, 1})}) {
        auto [unstable, kdim] = is_unstable_hyperplane(sd, HyperplaneCovec(out));
        CHECK_FALSE(unstable);
        CHECK(kdim == 0);
    }
}

TEST_CASE("with n+2 members every hyperplane is unstable") {
    Arrangement arr(2, {line_member(rv({1, 0, 0})), line_member(rv({0, 1, 0})), line_member(rv({0, 0, 1})),
                        line_member(rv({1, 1, 1}))});
    SteinerData sd = build_steiner(arr);
    oracles::Rng rng(71);
    for (int t = 0; t < 10; ++t) {
        auto [unstable, kdim] = is_unstable_hyperplane(sd, rng.line(2));
        CHECK(unstable);
    }
}

TEST_CASE("tangent lines of a conic: every further tangent is unstable") {
    std::vector<Member> ms;
    for (int t : {0, 1, 2, 3, -1, -2}) ms.push_back({1, tangent_line(t).polynomial(), ""});
    Arrangement arr(2, std::move(ms));
    REQUIRE(check_nc_hyperplanes(arr).holds());
    SteinerData sd = build_steiner(arr);
    for (int i = 0; i < 6; ++i) CHECK(is_unstable_hyperplane(sd, arr.covector(i)).first);
    // a seventh tangent line is also unstable
    CHECK(is_unstable_hyperplane(sd, tangent_line(5)).first);
    CHECK(is_unstable_hyperplane(sd, tangent_line(-7)).first);
    // while a generic outsider is not
    CHECK_FALSE(is_unstable_hyperplane(sd, HyperplaneCovec(rv({1, 1, 1}))).first);
}

TEST_CASE("unstable conics through the quadratic Veronese") {
    oracles::Rng rng(73);
    std::vector<Member> ms;
    std::vector<QuadricForm> conics;
    while (conics.size() < 9) {
        QuadricForm q = rng.smooth_quadric(2);
        try {
            ms.push_back(conic_member(q));
            Arrangement probe(2, ms);
            conics.push_back(q);
        } catch (const std::invalid_argument&) {
            ms.pop_back();
        }
    }
    Arrangement arr(2, ms);
    REQUIRE(check_nc_hyperplanes(lift_to_hyperplanes(arr, 2)).holds());

    for (const auto& q : conics) {
        auto [unstable, kdim] = is_unstable_conic(arr, q);
        CHECK(unstable);
        CHECK(kdim >= 1);
    }
    int outsiders = 0;
    while (outsiders < 3) {
        QuadricForm q = rng.smooth_quadric(2);
        bool is_member = false;
        for (const auto& c : conics) is_member |= proj_equal(c, q);
        if (is_member) continue;
        CHECK_FALSE(is_unstable_conic(arr, q).first);
        ++outsiders;
    }

    // label permutation does not matter
    std::vector<Member> perm{ms[3], ms[1], ms[4], ms[0], ms[2], ms[5], ms[8], ms[6], ms[7]};
    Arrangement arr2(2, perm);
    CHECK(is_unstable_conic(arr2, conics[0]).first);

    // too few members is a hypothesis failure
    Arrangement small(2, std::vector<Member>(ms.begin(), ms.begin() + 5));
    CHECK_THROWS_AS(is_unstable_conic(small, conics[0]), std::invalid_argument);
}

TEST_CASE("section zero locus is the vertex set") {
    QuadricForm c1 = oracles::conic3(Rational(0), Rational(1, 2), Rational(1, 2), Rational(0), Rational(-1), Rational(0));
    QuadricForm c2 = oracles::conic3(Rational(0), Rational(1, 2), Rational(1), Rational(0), Rational(-3, 2), Rational(0));
    auto locus = section_zero_locus(c1, c2);
    REQUIRE(locus.size() == 3);
    std::vector<std::vector<double>> expect{{1, 1, 0}, {1, 0, 1}, {0, 1, 1}};
    for (const auto& e : expect) {
        ComplexVec w;
        for (double x : e) w.emplace_back(x, 0.0);
        bool found = false;
        for (const auto& p : locus) found |= projective_distance(p.coords, w) < 1e-8;
        CHECK(found);
    }

    // equivariance under a congruence applied to both forms
    oracles::Rng rng(79);
    RatMatrix g = rng.invertible(3);
    QuadricForm t1(g.transpose() * c1.sym() * g), t2(g.transpose() * c2.sym() * g);
    auto locus2 = section_zero_locus(t1, t2);
    RatMatrix ginv = inverse(g);
    for (const auto& p : locus) {
        // vertices transform by g^-1 when the forms transform by congruence
        ComplexVec img(3, ComplexVal(0, 0));
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) img[r] += to_double(ginv.at(r, c)) * p.coords[c];
        bool found = false;
        for (const auto& q : locus2) found |= projective_distance(q.coords, img) < 1e-7;
        CHECK(found);
    }
}

TEST_CASE("jumping lines of the standard pair") {
    QuadricForm c1 = oracles::conic3(Rational(0), Rational(1, 2), Rational(1, 2), Rational(0), Rational(-1), Rational(0));
    QuadricForm c2 = oracles::conic3(Rational(0), Rational(1, 2), Rational(1), Rational(0), Rational(-3, 2), Rational(0));

    // the three lines joining pairs of {[1,1,0],[1,0,1],[0,1,1]}
    std::vector<HyperplaneCovec> joins{HyperplaneCovec(rv({1, -1, -1})), HyperplaneCovec(rv({-1, 1, -1})),
                                       HyperplaneCovec(rv({-1, -1, 1}))};
    for (const auto& l : joins) {
        CHECK(is_jumping_line(c1, c2, l));
        CHECK(rank(jumping_line_matrix(c1, c2, l)) == 5);
    }

    oracles::Rng rng(83);
    int others = 0;
    while (others < 20) {
        HyperplaneCovec l = rng.line(2);
        bool is_join = false;
        for (const auto& j : joins) is_join |= proj_equal(l, j);
        if (is_join) continue;
        CHECK_FALSE(is_jumping_line(c1, c2, l));
        CHECK(rank(jumping_line_matrix(c1, c2, l)) == 6);
        ++others;
    }

    // refuses pairs without normal crossings
    QuadricForm cc = oracles::conic3(Rational(0), Rational(0), Rational(1, 2), Rational(-1), Rational(0), Rational(0));
    RatMatrix shifted = cc.sym();
    shifted.at(2, 2) = shifted.at(2, 2) + 1;
    CHECK_THROWS_AS(is_jumping_line(cc, QuadricForm(shifted), joins[0]), std::domain_error);
}

TEST_CASE("verdicts are projectivity-equivariant") {
    Arrangement arr = six_generic_lines();
    SteinerData sd = build_steiner(arr);
    oracles::Rng rng(89);
    Projectivity tau(rng.invertible(3));
    Arrangement moved = arr.transformed(tau);
    SteinerData sd2 = build_steiner(moved);
    for (int i = 0; i < 6; ++i)
        CHECK(is_unstable_hyperplane(sd, arr.covector(i)).second ==
              is_unstable_hyperplane(sd2, moved.covector(i)).second);
    for (int t = 0; t < 10; ++t) {
        HyperplaneCovec h = rng.line(2);
        CHECK(is_unstable_hyperplane(sd, h).first == is_unstable_hyperplane(sd2, tau.apply(h)).first);
    }
}
