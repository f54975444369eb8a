#include "logtorelli/torelli.hpp"

#include "logtorelli/resolution.hpp"

#include <cmath>
#include <stdexcept>

namespace logtorelli {

std::string to_string(Equivalence e) {
    switch (e) {
        case Equivalence::Equivalent: return "Equivalent";
        case Equivalence::NotEquivalent: return "NotEquivalent";
        default: return "Indeterminate";
    }
}

bool proportional(const PointPairForm& a, const PointPairForm& b) {
    return proj_equal(std::vector<Rational>(a.coeffs.begin(), a.coeffs.end()),
                      std::vector<Rational>(b.coeffs.begin(), b.coeffs.end()));
}

TorelliVerdict decide_single_quadric(const QuadricForm& q1, const QuadricForm& q2) {
    if (!q1.smooth() || !q2.smooth()) throw std::domain_error("single-quadric case needs smooth quadrics");
    if (q1.dim() != q2.dim()) throw std::invalid_argument("quadrics live in different spaces");
    TorelliVerdict v;
    v.status = Equivalence::Equivalent;
    v.case_tag = "single-quadric";
    v.caveats.push_back("every single smooth quadric yields the twisted tangent bundle");
    return v;
}

namespace {

std::vector<Rational> vectorize_sym(const RatMatrix& m) {
    std::vector<Rational> v;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = i; j < m.cols(); ++j) v.push_back(m.at(i, j));
    return primitive_vector(std::move(v));
}

// diagonal of GO^T X GO normalized so the last entry is -1
ComplexVec normalized_diagonal(const ComplexMatrix& go, const RatMatrix& x) {
    ComplexMatrix d = cmul(cmul(ctranspose(go), to_complex(x)), go);
    const int m = static_cast<int>(d.size());
    ComplexVec out(m);
    ComplexVal last = d[m - 1][m - 1];
    for (int i = 0; i < m; ++i) out[i] = d[i][i] / (-last);
    return out;
}

struct CondValue {
    ComplexVal value;
    double scale;
};

CondValue accumulate(std::initializer_list<ComplexVal> products) {
    CondValue cv{ComplexVal(0, 0), 0.0};
    for (const auto& p : products) {
        cv.value += p;
        cv.scale += std::abs(p);
    }
    return cv;
}

}  // namespace

std::optional<std::string> vanishing_genericity_condition(const ComplexVec& a, const ComplexVec& b,
                                                          const ComplexVec& c, const ComplexVec& d) {
    const int n = static_cast<int>(a.size()) - 1;  // entries 0..n-1 are free, entry n is -1
    const double tol = tolerances().genericity;
    auto check = [&](const CondValue& cv, const std::string& name) -> std::optional<std::string> {
        if (std::abs(cv.value) <= tol * std::max(cv.scale, 1e-300)) return name;
        return std::nullopt;
    };
    CondValue m1 = accumulate({a[1] * c[1] * d[0], -a[1] * c[0] * d[1], c[1] * d[1] * c[0], -c[1] * d[1] * d[0]});
    if (auto bad = check(m1, "invertibility-of-M'")) return bad;
    for (int i = 2; i <= n; ++i) {
        ComplexVal ai = a[i - 1], bi = b[i - 1];
        CondValue mi = accumulate({c[1] * ai * b[0] * d[1] * d[0],
                                   -c[1] * ai * b[0] * d[1] * c[0],
                                   -c[1] * ai * b[0] * a[1] * d[0],
                                   -c[1] * a[0] * bi * d[1] * d[0],
                                   c[1] * a[0] * bi * d[1] * c[0],
                                   c[1] * a[0] * bi * a[1] * d[0],
                                   a[1] * c[0] * b[0] * c[1] * ai,
                                   -a[1] * c[0] * b[0] * c[1] * bi,
                                   a[1] * c[0] * bi * d[1] * b[0],
                                   -a[1] * c[0] * bi * d[1] * a[0]});
        if (auto bad = check(mi, "invertibility-of-M'' (index " + std::to_string(i) + ")")) return bad;
    }
    return std::nullopt;
}

TorelliVerdict decide_pair_quadrics(const QuadricForm& a, const QuadricForm& b,
                                    const QuadricForm& c, const QuadricForm& d) {
    for (const QuadricForm* q : {&a, &b, &c, &d})
        if (!q->smooth()) throw std::domain_error("pair-of-quadrics case needs smooth quadrics");
    if (a.dim() != b.dim() || a.dim() != c.dim() || a.dim() != d.dim())
        throw std::invalid_argument("quadrics live in different spaces");
    if (!has_normal_crossings_pair(a, b) || !has_normal_crossings_pair(c, d))
        throw std::domain_error("both pairs must cross normally");

    TorelliVerdict v;
    v.case_tag = "pair-of-quadrics";
    DualPencilWitness w{adjugate(a.sym()), adjugate(b.sym()), adjugate(c.sym()), adjugate(d.sym()), 0};

    std::vector<std::vector<Rational>> rows{vectorize_sym(w.adj_a), vectorize_sym(w.adj_b),
                                            vectorize_sym(w.adj_c), vectorize_sym(w.adj_d)};
    RatMatrix stack(4, static_cast<int>(rows[0].size()));
    for (int i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) stack.at(i, static_cast<int>(j)) = rows[i][j];
    w.stacked_rank = rank(stack);

    if (w.stacked_rank != 2) {
        v.status = Equivalence::NotEquivalent;
        v.witness = std::move(w);
        return v;
    }

    // span matches; screen the open conditions in the diagonalized frame
    auto [go, lambda] = simultaneous_diagonalize(a, b);
    ComplexVec da = normalized_diagonal(go, a.sym());
    ComplexVec db = normalized_diagonal(go, b.sym());
    ComplexVec dc = normalized_diagonal(go, c.sym());
    ComplexVec dd = normalized_diagonal(go, d.sym());
    if (auto bad = vanishing_genericity_condition(da, db, dc, dd)) {
        v.status = Equivalence::Indeterminate;
        v.caveats.push_back("dual pencils coincide but the open condition " + *bad +
                            " vanishes; the construction of the isomorphism is not covered");
    } else {
        v.status = Equivalence::Equivalent;
        v.caveats.push_back("open conditions screened numerically in the diagonalized frame");
    }
    v.witness = std::move(w);
    return v;
}

TorelliVerdict decide_hyperplane_quadric(const HyperplaneCovec& h, const QuadricForm& q,
                                         const HyperplaneCovec& h2, const QuadricForm& q2) {
    if (!q.smooth() || !q2.smooth()) throw std::domain_error("hyperplane+quadric case needs smooth quadrics");
    auto tangent = [](const HyperplaneCovec& hh, const QuadricForm& qq) {
        return dual_quadric(qq).bilinear(hh.coeffs, hh.coeffs) == 0;
    };
    if (tangent(h, q) || tangent(h2, q2))
        throw std::domain_error("hyperplane is tangent to the quadric; no normal crossings");

    TorelliVerdict v;
    v.case_tag = "hyperplane+quadric";
    PoleWitness w{pole_of(q, h).canonical(), pole_of(q2, h2).canonical()};
    v.status = proj_equal(w.pole_a, w.pole_b) ? Equivalence::Equivalent : Equivalence::NotEquivalent;
    v.witness = std::move(w);
    return v;
}

namespace {

ProjPoint cross_point(const HyperplaneCovec& r1, const HyperplaneCovec& r2) {
    const auto& a = r1.coeffs;
    const auto& b = r2.coeffs;
    return ProjPoint({a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]});
}

PointPairForm restrict_to_line(const QuadricForm& conic, const HyperplaneCovec& line) {
    auto [p, q] = line_span_points(line);
    std::vector<Rational> v{conic.bilinear(p.coords, p.coords),
                            conic.bilinear(p.coords, q.coords) * 2,
                            conic.bilinear(q.coords, q.coords)};
    v = primitive_vector(std::move(v));
    return PointPairForm{{v[0], v[1], v[2]}};
}

void require_two_lines_conic_nc(const HyperplaneCovec& r1, const HyperplaneCovec& r2,
                                const QuadricForm& conic) {
    if (conic.dim() != 2) throw std::invalid_argument("two-lines+conic case is planar");
    if (!conic.smooth()) throw std::domain_error("conic must be smooth");
    if (proj_equal(r1, r2)) throw std::invalid_argument("the two lines coincide");
    if (!check_nc_line_conic(r1, conic).holds() || !check_nc_line_conic(r2, conic).holds())
        throw std::domain_error("a line is tangent to the conic; no normal crossings");
    ProjPoint vertex = cross_point(r1, r2);
    if (conic.evaluate(vertex) == 0)
        throw std::domain_error("the lines meet on the conic; no normal crossings");
}

}  // namespace

TorelliVerdict decide_conic_two_lines(const HyperplaneCovec& r1, const HyperplaneCovec& r2,
                                      const QuadricForm& conic,
                                      const HyperplaneCovec& s1, const HyperplaneCovec& s2,
                                      const QuadricForm& conic2) {
    require_two_lines_conic_nc(r1, r2, conic);
    require_two_lines_conic_nc(s1, s2, conic2);

    TorelliVerdict v;
    v.case_tag = "conic+two-lines";
    HyperplaneCovec la = polar_hyperplane(conic, cross_point(r1, r2)).canonical();
    HyperplaneCovec lb = polar_hyperplane(conic2, cross_point(s1, s2)).canonical();
    PointPairWitness w{la, lb, restrict_to_line(conic, la), restrict_to_line(conic2, lb)};
    v.status = (proj_equal(la, lb) && proportional(w.pair_a, w.pair_b))
                   ? Equivalence::Equivalent
                   : Equivalence::NotEquivalent;
    v.witness = std::move(w);
    return v;
}

RatMatrix three_lines_conic_system(const QuadricForm& conic) {
    if (conic.dim() != 2) throw std::invalid_argument("the cubic lift is planar");
    const RatMatrix& s = conic.sym();
    const Rational d00 = s.at(0, 0), d01 = s.at(0, 1), d02 = s.at(0, 2);
    const Rational d11 = s.at(1, 1), d12 = s.at(1, 2), d22 = s.at(2, 2);
    const Rational z(0);
    std::vector<Rational> e{
        d01,     d01,     z,        -2 * d00, z,        z,        z,        z,        z,
        z,       2 * d11, z,        -d01,     -d01,     z,        z,        z,        z,
        z,       d12,     d12,      -d02,     z,        -d02,     z,        z,        z,
        d02,     z,       d02,      z,        z,        z,        -2 * d00, z,        z,
        z,       d12,     d12,      z,        z,        z,        -d01,     -d01,     z,
        z,       z,       2 * d22,  z,        z,        z,        -d02,     z,        -d02,
        z,       z,       z,        d02,      z,        d02,      -d01,     -d01,     z,
        z,       z,       z,        z,        d12,      d12,      z,        -2 * d11, z,
        z,       z,       z,        z,        z,        2 * d22,  z,        -d12,     -d12};
    return RatMatrix(9, 9, std::move(e));
}

namespace {

void require_triangle_conic_nc(const QuadricForm& conic) {
    if (!conic.smooth()) throw std::domain_error("conic must be smooth");
    const RatMatrix& s = conic.sym();
    for (int i = 0; i < 3; ++i)
        if (s.at(i, i) == 0)
            throw std::domain_error("conic passes through a triangle vertex; no normal crossings");
    for (int i = 0; i < 3; ++i) {
        std::vector<Rational> line(3, Rational(0));
        line[i] = 1;
        if (!check_nc_line_conic(HyperplaneCovec(line), conic).holds())
            throw std::domain_error("conic is tangent to a triangle edge; no normal crossings");
    }
}

HomPoly cubic_from_solution(const QuadricForm& conic, const std::vector<Rational>& v) {
    const RatMatrix& s = conic.sym();
    const Rational d00 = s.at(0, 0), d11 = s.at(1, 1), d22 = s.at(2, 2);
    const Rational d01 = s.at(0, 1), d02 = s.at(0, 2), d12 = s.at(1, 2);
    HomPoly g(3, 3);
    auto term = [&](int e0, int e1, int e2, const Rational& c) { g.add_term({e0, e1, e2}, c); };
    term(3, 0, 0, v[0] * d00 * Rational(-2, 3));
    term(2, 1, 0, v[3] * d00 * -2);
    term(1, 2, 0, v[1] * d11 * -2);
    term(0, 3, 0, v[4] * d11 * Rational(-2, 3));
    term(1, 0, 2, v[2] * d22 * -2);
    term(2, 0, 1, v[6] * d00 * -2);
    term(1, 1, 1, (v[1] + v[2]) * d12 * -2);
    term(0, 2, 1, v[7] * d11 * -2);
    term(0, 1, 2, v[5] * d22 * -2);
    term(0, 0, 3, v[8] * d22 * Rational(-2, 3));
    return g;
}

// the net x_0 d_0 f, x_1 d_1 f, x_2 d_2 f as a 3x6 coefficient matrix
RatMatrix net_matrix(const QuadricForm& conic) {
    RatMatrix m(3, 6);
    for (int k = 0; k < 3; ++k) {
        Exponents e(3, 0);
        e[k] = 1;
        HomPoly u = HomPoly::monomial(3, e, Rational(1)) * conic.polynomial().derivative(k);
        auto cv = u.coefficient_vector();
        for (int j = 0; j < 6; ++j) m.at(k, j) = cv[j];
    }
    return m;
}

bool row_space_equal(const RatMatrix& a, const RatMatrix& b) {
    if (rank(a) != rank(b)) return false;
    RatMatrix stacked(a.rows() + b.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) stacked.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) stacked.at(a.rows() + i, j) = b.at(i, j);
    return rank(stacked) == rank(a);
}

}  // namespace

CubicLift lift_three_lines_conic(const QuadricForm& conic) {
    require_triangle_conic_nc(conic);
    RatMatrix sys = three_lines_conic_system(conic);
    CubicLift lift;
    lift.system_rank = rank(sys);

    const RatMatrix& s = conic.sym();
    const bool diagonal = s.at(0, 1) == 0 && s.at(0, 2) == 0 && s.at(1, 2) == 0;
    if (lift.system_rank == 8) {
        lift.solution = kernel_basis(sys)[0];
    } else if (diagonal) {
        // the system degenerates for diagonal conics; the symmetric kernel
        // vector pins the cubic with partials x_i d_i f
        lift.solution = {Rational(-1), Rational(0), Rational(0),
                         Rational(0), Rational(-1), Rational(0),
                         Rational(0), Rational(0), Rational(-1)};
    } else {
        throw std::domain_error("cubic-lift system has rank " + std::to_string(lift.system_rank) +
                                ", expected 8; degenerate conic coefficients");
    }

    lift.g = cubic_from_solution(conic, lift.solution);
    // defining identities, re-checked exactly
    RatMatrix net = net_matrix(conic);
    RatMatrix partials(3, 6);
    for (int k = 0; k < 3; ++k) {
        auto cv = lift.g.derivative(k).coefficient_vector();
        for (int j = 0; j < 6; ++j) {
            Rational expect(0);
            for (int i = 0; i < 3; ++i) expect -= lift.solution[3 * k + i] * net.at(i, j);
            if (cv[j] != expect) throw std::logic_error("cubic reconstruction failed its defining identity");
            partials.at(k, j) = cv[j];
        }
    }
    lift.span_certified = row_space_equal(partials, net);
    return lift;
}

std::pair<CubicLift, Projectivity> lift_three_lines_conic(const Arrangement& arr) {
    Ch8Resolution red = minimal_resolution_ch8(arr);
    if (red.resolution.target_twists != std::vector<int>{0, 0, 0})
        throw std::invalid_argument("the cubic lift needs three lines and a conic");
    return {lift_three_lines_conic(red.conic), red.frame};
}

}  // namespace logtorelli
