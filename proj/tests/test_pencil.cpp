#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "logtorelli/pencil.hpp"
#include "oracles.hpp"

using namespace logtorelli;

namespace {

QuadricForm diag(std::initializer_list<int> v) {
    std::vector<Rational> d;
    for (int x : v) d.push_back(Rational(x));
    return QuadricForm(RatMatrix::diagonal(d));
}

// the normal-crossing conic pair with base points [1,0,0],[0,1,0],[0,0,1],[1,1,1]
QuadricForm standard_conic(const Rational& a, const Rational& b) {
    return oracles::conic3(Rational(0), Rational(1, 2), a / 2, Rational(0), b / 2, Rational(0));
}

bool matches_set(const std::vector<NumProjPoint>& got, const std::vector<std::vector<double>>& expect,
                 double tol) {
    if (got.size() != expect.size()) return false;
    std::vector<bool> used(expect.size(), false);
    for (const auto& g : got) {
        bool found = false;
        for (std::size_t i = 0; i < expect.size() && !found; ++i) {
            if (used[i]) continue;
            ComplexVec w;
            for (double x : expect[i]) w.emplace_back(x, 0.0);
            if (projective_distance(g.coords, w) < tol) {
                used[i] = true;
                found = true;
            }
        }
        if (!found) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("analyze_pencil: diagonal case") {
    PencilReport rep = analyze_pencil(diag({1, 2, 3}), QuadricForm(RatMatrix::identity(3)));
    CHECK(rep.distinct);
    REQUIRE(rep.roots.size() == 3);
    CHECK(std::abs(rep.roots[0] - ComplexVal(-3, 0)) < 1e-9);
    CHECK(std::abs(rep.roots[1] - ComplexVal(-2, 0)) < 1e-9);
    CHECK(std::abs(rep.roots[2] - ComplexVal(-1, 0)) < 1e-9);
    CHECK(matches_set(rep.vertices, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 1e-9));
    CHECK(rep.residual < 1e-10);
}

TEST_CASE("analyze_pencil: paper vertices of the standard pair") {
    QuadricForm c1 = standard_conic(Rational(1), Rational(-2));
    QuadricForm c2 = standard_conic(Rational(2), Rational(-3));
    PencilReport rep = analyze_pencil(c1, c2);
    CHECK(rep.distinct);
    CHECK(matches_set(rep.vertices, {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}}, 1e-8));
}

TEST_CASE("analyze_pencil rejects a degenerate pencil") {
    QuadricForm q = diag({1, 2, 3});
    QuadricForm q2(q.sym().scaled(Rational(5)));
    CHECK_THROWS_AS(analyze_pencil(q, q2), std::domain_error);
    RatMatrix sing(3, 3);
    sing.at(0, 0) = 1;
    sing.at(1, 1) = 1;
    CHECK_THROWS_AS(analyze_pencil(QuadricForm(sing), diag({1, 2, 3})), std::domain_error);
}

TEST_CASE("has_normal_crossings_pair: frozen cases") {
    CHECK(has_normal_crossings_pair(diag({1, 2, 3}), QuadricForm(RatMatrix::identity(3))));

    // conic x0 x2 - x1^2 and its translate by the square of the tangent line
    // {x2 = 0} at [1,0,0]; they meet with multiplicity there
    QuadricForm c = oracles::conic3(Rational(0), Rational(0), Rational(1, 2), Rational(-1), Rational(0), Rational(0));
    RatMatrix shifted = c.sym();
    shifted.at(2, 2) = shifted.at(2, 2) + 1;
    QuadricForm c_tangent(shifted);
    REQUIRE(c_tangent.smooth());
    CHECK_FALSE(has_normal_crossings_pair(c, c_tangent));
    CHECK(discriminant(char_poly_pencil(c.sym(), c_tangent.sym())) == 0);

    // proportional pair: identically degenerate
    CHECK_FALSE(has_normal_crossings_pair(diag({1, 2, 3}), QuadricForm(diag({1, 2, 3}).sym().scaled(Rational(2)))));
}

TEST_CASE("base points: diagonal frame values and the defining property") {
    QuadricForm a = diag({1, 2, 3});
    QuadricForm b(RatMatrix::identity(3));
    auto pts = base_points_conics(a, b);
    REQUIRE(pts.size() == 4);
    // substitution into both forms is the oracle: the four common points of
    // x0^2 + 2 x1^2 + 3 x2^2 and x0^2 + x1^2 + x2^2 are [1, +-i sqrt2, +-1]
    const double s2 = std::sqrt(2.0);
    int hits = 0;
    for (const auto& p : pts) {
        for (double s1 : {+1.0, -1.0})
            for (double s0 : {+1.0, -1.0}) {
                ComplexVec w{ComplexVal(1, 0), ComplexVal(0, s1 * s2), ComplexVal(s0, 0)};
                if (projective_distance(p.coords, w) < 1e-8) ++hits;
            }
    }
    CHECK(hits == 4);
    for (const auto& p : pts) {
        CHECK(std::abs(a.evaluate(p.coords)) < 1e-9 * 6);
        CHECK(std::abs(b.evaluate(p.coords)) < 1e-9 * 3);
    }
}

TEST_CASE("base points of the standard pair are the four reference points") {
    QuadricForm c1 = standard_conic(Rational(1), Rational(-2));
    QuadricForm c2 = standard_conic(Rational(2), Rational(-3));
    auto pts = base_points_conics(c1, c2);
    CHECK(matches_set(pts, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}, 1e-8));
}

TEST_CASE("simultaneous diagonalization: identity case and congruence recovery") {
    auto [go, lambda] = simultaneous_diagonalize(diag({1, 2, 3}), QuadricForm(RatMatrix::identity(3)));
    REQUIRE(lambda.size() == 3);
    CHECK(std::abs(lambda[0] - 3.0) < 1e-10);
    CHECK(std::abs(lambda[1] - 2.0) < 1e-10);
    CHECK(std::abs(lambda[2] - 1.0) < 1e-10);

    oracles::Rng rng(23);
    RatMatrix g = rng.invertible(3);
    QuadricForm a(g.transpose() * diag({1, 2, 3}).sym() * g);
    QuadricForm b(g.transpose() * g);  // identity scrambled by the same congruence
    auto [go2, lambda2] = simultaneous_diagonalize(a, b);
    std::vector<double> vals;
    for (const auto& z : lambda2) {
        CHECK(std::abs(z.imag()) < 1e-8);
        vals.push_back(z.real());
    }
    std::sort(vals.begin(), vals.end());
    CHECK(std::abs(vals[0] - 1.0) < 1e-8);
    CHECK(std::abs(vals[1] - 2.0) < 1e-8);
    CHECK(std::abs(vals[2] - 3.0) < 1e-8);
}

TEST_CASE("residual bound over random smooth distinct pairs") {
    oracles::Rng rng(29);
    int done = 0;
    while (done < 50) {
        QuadricForm a = rng.smooth_quadric(2), b = rng.smooth_quadric(2);
        if (proj_equal(a, b) || !has_normal_crossings_pair(a, b)) continue;
        PencilReport rep = analyze_pencil(a, b);
        CHECK(rep.residual <= 1e-8);
        // vertex property: (A + t_i B) v_i ~ 0
        for (std::size_t i = 0; i < rep.roots.size(); ++i) {
            ComplexMatrix pencil_at = to_complex(a.sym());
            ComplexMatrix bc = to_complex(b.sym());
            double scale = cnorm_inf(pencil_at) + cnorm_inf(bc);
            const auto& v = rep.vertices[i].coords;
            double vn = 0.0;
            for (const auto& z : v) vn = std::max(vn, std::abs(z));
            for (int r = 0; r < 3; ++r) {
                ComplexVal s(0, 0);
                for (int c = 0; c < 3; ++c) s += (pencil_at[r][c] + rep.roots[i] * bc[r][c]) * v[c];
                CHECK(std::abs(s) <= 1e-8 * scale * vn * (1.0 + std::abs(rep.roots[i])));
            }
        }
        ++done;
    }
}

TEST_CASE("congruence invariance of the pencil polynomial") {
    oracles::Rng rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        QuadricForm a = rng.smooth_quadric(2), b = rng.smooth_quadric(2);
        RatMatrix g = rng.invertible(3);
        UniPoly before = char_poly_pencil(a.sym(), b.sym());
        UniPoly after = char_poly_pencil(g.transpose() * a.sym() * g, g.transpose() * b.sym() * g);
        Rational dg = det(g);
        CHECK(after == before.scaled(dg * dg));
    }
}

TEST_CASE("exact distinctness agrees with numeric root separation") {
    oracles::Rng rng(37);
    int seen_distinct = 0, seen_repeated = 0;
    while (seen_distinct < 20 || seen_repeated < 5) {
        QuadricForm a = rng.smooth_quadric(2);
        QuadricForm b = rng.smooth_quadric(2);
        if (proj_equal(a, b)) continue;
        UniPoly p = char_poly_pencil(a.sym(), b.sym());
        if (p.degree() < 1) continue;
        bool distinct = discriminant(p) != 0;
        auto roots = complex_roots(p);
        double minsep = 1e300;
        for (std::size_t i = 0; i < roots.size(); ++i)
            for (std::size_t j = i + 1; j < roots.size(); ++j)
                minsep = std::min(minsep, std::abs(roots[i] - roots[j]));
        if (distinct) {
            CHECK(minsep > 1e-7);
            ++seen_distinct;
        } else {
            CHECK(minsep < 1e-4);
            ++seen_repeated;
        }
        if (seen_repeated < 5 && seen_distinct >= 20) {
            // manufacture a repeated-root pair: tangent conics
            QuadricForm c =
                oracles::conic3(Rational(0), Rational(0), Rational(1, 2), Rational(-1), Rational(0), Rational(0));
            RatMatrix shifted = c.sym();
            shifted.at(2, 2) = shifted.at(2, 2) + rng.nonzero_rational(1, 5, 1);
            QuadricForm ct(shifted);
            UniPoly q = char_poly_pencil(c.sym(), ct.sym());
            CHECK(discriminant(q) == 0);
            auto rr = complex_roots(q);
            double ms = 1e300;
            for (std::size_t i = 0; i < rr.size(); ++i)
                for (std::size_t j = i + 1; j < rr.size(); ++j) ms = std::min(ms, std::abs(rr[i] - rr[j]));
            CHECK(ms < 1e-4);
            ++seen_repeated;
        }
    }
}
