#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "logtorelli/matrix.hpp"
#include "logtorelli/numeric.hpp"
#include "oracles.hpp"

using namespace logtorelli;

TEST_CASE("rational parsing and canonical form") {
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-4/2") == Rational(-2));
    CHECK(parse_rational(" 7 ") == Rational(7));
    CHECK(rational_to_string(Rational(-3, 9)) == "-1/3");
    CHECK(parse_rational("5/-1") == Rational(-5));  // sign canonicalized on load
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("a/b"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("rank: identity and constructed low-rank") {
    CHECK(rank(RatMatrix::identity(3)) == 3);

    // rank-2 4x6 built as a sum of two independent outer products; the
    // construction is the oracle
    oracles::Rng rng(42);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Rational> u1, u2, v1, v2;
        for (int i = 0; i < 4; ++i) {
            u1.push_back(rng.rational());
            u2.push_back(rng.rational());
        }
        for (int j = 0; j < 6; ++j) {
            v1.push_back(rng.rational());
            v2.push_back(rng.rational());
        }
        RatMatrix m(4, 6);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 6; ++j) m.at(i, j) = u1[i] * v1[j] + u2[i] * v2[j];
        int r = rank(m);
        CHECK(r <= 2);
        // independence check: u's and v's not proportional
        bool indep_u = !proj_equal(u1, u2), indep_v = !proj_equal(v1, v2);
        if (indep_u && indep_v) CHECK(r == 2);
    }
}

TEST_CASE("kernel_basis: identity, symmetric row, rank-nullity") {
    CHECK(kernel_basis(RatMatrix::identity(4)).empty());

    RatMatrix row(1, 3, {Rational(1), Rational(1), Rational(1)});
    auto ker = kernel_basis(row);
    REQUIRE(ker.size() == 2);
    for (const auto& v : ker) CHECK(v[0] + v[1] + v[2] == 0);

    oracles::Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        int r = 1 + trial % 6, c = 1 + (trial * 3) % 7;
        RatMatrix m = rng.matrix(r, c);
        auto k = kernel_basis(m);
        CHECK(rank(m) + static_cast<int>(k.size()) == c);
        for (const auto& v : k) {
            auto image = m.apply(v);
            for (const auto& x : image) CHECK(x == 0);
        }
    }
}

TEST_CASE("adjugate: frozen cases and the defining identity") {
    CHECK(adjugate(RatMatrix::identity(3)) == RatMatrix::identity(3));

    // cofactor expansion by hand: adj(diag(1,2,-1)) = diag(-2,-1,2)
    RatMatrix d = RatMatrix::diagonal({Rational(1), Rational(2), Rational(-1)});
    CHECK(adjugate(d) == RatMatrix::diagonal({Rational(-2), Rational(-1), Rational(2)}));

    // rank-1 3x3: all 2x2 cofactors vanish
    RatMatrix r1(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r1.at(i, j) = Rational(i + 1) * Rational(j + 2);
    CHECK(adjugate(r1).is_zero());

    oracles::Rng rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + trial % 6;
        RatMatrix m = rng.matrix(n, n);
        Rational dm = det(m);
        CHECK(dm == oracles::naive_det(m));
        RatMatrix prod = m * adjugate(m);
        CHECK(prod == RatMatrix::identity(n).scaled(dm));
    }
}

TEST_CASE("char_poly_pencil: diagonal case, degenerate slots, symbolic oracle") {
    RatMatrix a = RatMatrix::diagonal({Rational(1), Rational(2), Rational(3)});
    RatMatrix id = RatMatrix::identity(3);
    UniPoly expect = oracles::poly_from_roots({Rational(-1), Rational(-2), Rational(-3)}, Rational(1));
    CHECK(char_poly_pencil(a, id) == expect);

    RatMatrix zero(3, 3);
    CHECK(char_poly_pencil(a, zero) == UniPoly::constant(Rational(6)));
    CHECK(char_poly_pencil(zero, id) == UniPoly({Rational(0), Rational(0), Rational(0), Rational(1)}));

    oracles::Rng rng(5);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 2 + trial % 4;
        RatMatrix x = rng.matrix(n, n), y = rng.matrix(n, n);
        CHECK(char_poly_pencil(x, y) == oracles::naive_pencil_poly(x, y));
    }
}

TEST_CASE("discriminant: classical values and the gcd criterion") {
    CHECK(discriminant(UniPoly({Rational(-1), Rational(0), Rational(1)})) == Rational(4));
    // (t-1)^2 = 1 - 2t + t^2
    CHECK(discriminant(UniPoly({Rational(1), Rational(-2), Rational(1)})) == Rational(0));

    UniPoly cubic = oracles::poly_from_roots({Rational(-1), Rational(-2), Rational(-3)}, Rational(1));
    CHECK(discriminant(cubic) == oracles::disc_from_roots({Rational(-1), Rational(-2), Rational(-3)}, Rational(1)));
    CHECK(discriminant(cubic) != 0);

    CHECK_THROWS_AS(discriminant(UniPoly()), std::domain_error);
    CHECK_THROWS_AS(discriminant(UniPoly::constant(Rational(3))), std::domain_error);

    oracles::Rng rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        int deg = 2 + trial % 4;
        std::vector<Rational> roots;
        for (int i = 0; i < deg; ++i) roots.push_back(rng.rational(-5, 5, 2));
        bool repeated = false;
        for (std::size_t i = 0; i < roots.size() && !repeated; ++i)
            for (std::size_t j = i + 1; j < roots.size(); ++j)
                if (roots[i] == roots[j]) { repeated = true; break; }
        Rational lc = rng.nonzero_rational();
        UniPoly p = oracles::poly_from_roots(roots, lc);
        CHECK((discriminant(p) == 0) == repeated);
        CHECK(discriminant(p) == oracles::disc_from_roots(roots, lc));
    }
}

TEST_CASE("complex_roots: frozen roots, multiplicity, residual bound") {
    auto r = complex_roots(UniPoly({Rational(1), Rational(0), Rational(1)}));
    REQUIRE(r.size() == 2);
    CHECK(std::abs(r[0] - ComplexVal(0, -1)) < 1e-10);
    CHECK(std::abs(r[1] - ComplexVal(0, 1)) < 1e-10);

    UniPoly cubic = oracles::poly_from_roots({Rational(-1), Rational(-2), Rational(-3)}, Rational(1));
    auto rc = complex_roots(cubic);
    REQUIRE(rc.size() == 3);
    CHECK(std::abs(rc[0] - ComplexVal(-3, 0)) < 1e-10);
    CHECK(std::abs(rc[1] - ComplexVal(-2, 0)) < 1e-10);
    CHECK(std::abs(rc[2] - ComplexVal(-1, 0)) < 1e-10);

    UniPoly sq = UniPoly({Rational(1), Rational(-2), Rational(1)});
    auto rs = complex_roots(sq);
    REQUIRE(rs.size() == 2);
    CHECK(std::abs(rs[0] - 1.0) < 1e-6);
    CHECK(std::abs(rs[1] - 1.0) < 1e-6);
    CHECK(discriminant(sq) == 0);  // the repeated flag comes from the exact side

    oracles::Rng rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        int deg = 1 + trial % 6;
        std::vector<Rational> roots;
        for (int i = 0; i < deg; ++i) roots.push_back(rng.rational(-6, 6, 3));
        UniPoly p = oracles::poly_from_roots(roots, rng.nonzero_rational());
        for (const auto& z : complex_roots(p)) {
            double cmax = 0.0;
            for (int i = 0; i <= p.degree(); ++i) cmax = std::max(cmax, std::abs(to_double(p.coeff(i))));
            double scale = cmax;
            for (int i = 0; i < p.degree(); ++i) scale *= std::max(1.0, std::abs(z));
            CHECK(std::abs(p.evaluate(z)) <= 1e-9 * scale);
        }
    }
}

TEST_CASE("HomPoly arithmetic and substitution") {
    HomPoly f = HomPoly::monomial(3, {2, 0, 0}, Rational(1)) + HomPoly::monomial(3, {0, 1, 1}, Rational(-2));
    CHECK(f.degree() == 2);
    CHECK(f.derivative(0) == HomPoly::monomial(3, {1, 0, 0}, Rational(2)));
    CHECK(f.evaluate({Rational(1), Rational(2), Rational(3)}) == Rational(1 - 12));

    oracles::Rng rng(31);
    RatMatrix g = rng.invertible(3);
    std::vector<Rational> flat;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) flat.push_back(g.at(i, j));
    HomPoly sub = f.substitute_linear(flat, 3);
    for (int t = 0; t < 10; ++t) {
        ProjPoint p = rng.point(2);
        CHECK(sub.evaluate(p.coords) == f.evaluate(g.apply(p.coords)));
    }
}

TEST_CASE("PolyMatrix twist bookkeeping") {
    PolyMatrix m(2, 1, 3, {0, -1}, {-2});
    m.set(0, 0, HomPoly::monomial(3, {1, 1, 0}, Rational(1)));
    m.set(1, 0, HomPoly::monomial(3, {0, 1, 0}, Rational(3)));
    CHECK(m.degrees_consistent());
    CHECK_THROWS_AS(m.set(1, 0, HomPoly::monomial(3, {2, 0, 0}, Rational(1))), std::invalid_argument);
}
