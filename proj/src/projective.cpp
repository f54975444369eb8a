#include "logtorelli/projective.hpp"

#include <algorithm>
#include <stdexcept>

namespace logtorelli {

namespace {

bool all_zero(const std::vector<Rational>& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

std::vector<Rational> canonical_scale(std::vector<Rational> v) {
    for (const auto& x : v)
        if (x != 0) {
            Rational lead = x;
            for (auto& y : v) y /= lead;
            break;
        }
    return v;
}

}  // namespace

ProjPoint::ProjPoint(std::vector<Rational> c) : coords(std::move(c)) {
    if (coords.empty() || all_zero(coords)) throw std::invalid_argument("projective point needs a nonzero coordinate");
}

ProjPoint ProjPoint::canonical() const { return ProjPoint(canonical_scale(coords)); }

HyperplaneCovec::HyperplaneCovec(std::vector<Rational> c) : coeffs(std::move(c)) {
    if (coeffs.empty() || all_zero(coeffs)) throw std::invalid_argument("hyperplane covector must be nonzero");
}

HyperplaneCovec HyperplaneCovec::canonical() const { return HyperplaneCovec(canonical_scale(coeffs)); }

Rational HyperplaneCovec::evaluate(const ProjPoint& p) const {
    if (p.coords.size() != coeffs.size()) throw std::invalid_argument("dimension mismatch");
    Rational s(0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) s += coeffs[i] * p.coords[i];
    return s;
}

bool proj_equal(const std::vector<Rational>& u, const std::vector<Rational>& v) {
    if (u.size() != v.size()) return false;
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = i + 1; j < u.size(); ++j)
            if (u[i] * v[j] - u[j] * v[i] != 0) return false;
    return true;
}

bool proj_equal(const ProjPoint& a, const ProjPoint& b) { return proj_equal(a.coords, b.coords); }
bool proj_equal(const HyperplaneCovec& a, const HyperplaneCovec& b) { return proj_equal(a.coeffs, b.coeffs); }

NumProjPoint NumProjPoint::canonical() const {
    std::size_t best = 0;
    for (std::size_t i = 1; i < coords.size(); ++i)
        if (std::abs(coords[i]) > std::abs(coords[best])) best = i;
    ComplexVal lead = coords[best];
    NumProjPoint r{coords};
    for (auto& z : r.coords) z /= lead;
    return r;
}

QuadricForm::QuadricForm(RatMatrix sym) : sym_(std::move(sym)) {
    if (sym_.rows() != sym_.cols() || sym_.rows() < 2) throw std::invalid_argument("quadric matrix must be square, size >= 2");
    if (!sym_.is_symmetric()) throw std::invalid_argument("quadric matrix must be symmetric");
    if (sym_.is_zero()) throw std::invalid_argument("quadric matrix must be nonzero");
}

QuadricForm QuadricForm::from_polynomial(const HomPoly& f) {
    if (f.degree() != 2) throw std::invalid_argument("quadric needs a degree-2 polynomial");
    const int m = f.num_vars();
    RatMatrix sym(m, m);
    for (const auto& [e, c] : f.terms()) {
        int i = -1, j = -1;
        for (int v = 0; v < m; ++v) {
            if (e[v] == 2) { i = j = v; break; }
            if (e[v] == 1) { (i < 0 ? i : j) = v; }
        }
        if (i == j) sym.at(i, i) = c;
        else { sym.at(i, j) = c / 2; sym.at(j, i) = c / 2; }
    }
    return QuadricForm(sym);
}

Rational QuadricForm::evaluate(const ProjPoint& p) const { return bilinear(p.coords, p.coords); }

ComplexVal QuadricForm::evaluate(const ComplexVec& p) const {
    const int m = sym_.rows();
    if (static_cast<int>(p.size()) != m) throw std::invalid_argument("dimension mismatch");
    ComplexVal s(0.0, 0.0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) s += to_double(sym_.at(i, j)) * p[i] * p[j];
    return s;
}

Rational QuadricForm::bilinear(const std::vector<Rational>& u, const std::vector<Rational>& v) const {
    const int m = sym_.rows();
    if (static_cast<int>(u.size()) != m || static_cast<int>(v.size()) != m)
        throw std::invalid_argument("dimension mismatch");
    Rational s(0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) s += sym_.at(i, j) * u[i] * v[j];
    return s;
}

HomPoly QuadricForm::polynomial() const {
    const int m = sym_.rows();
    HomPoly f(m, 2);
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
            Exponents e(m, 0);
            e[i] += 1;
            e[j] += 1;
            f.add_term(e, i == j ? sym_.at(i, i) : sym_.at(i, j) * 2);
        }
    return f;
}

bool proj_equal(const QuadricForm& a, const QuadricForm& b) {
    const int m = a.sym().rows();
    if (m != b.sym().rows()) return false;
    std::vector<Rational> u, v;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            u.push_back(a.sym().at(i, j));
            v.push_back(b.sym().at(i, j));
        }
    return proj_equal(u, v);
}

Projectivity::Projectivity(RatMatrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) throw std::invalid_argument("projectivity matrix must be square");
    minv_ = inverse(m_);  // throws on det = 0
}

ProjPoint Projectivity::apply(const ProjPoint& p) const { return ProjPoint(m_.apply(p.coords)); }

HyperplaneCovec Projectivity::apply(const HyperplaneCovec& h) const {
    return HyperplaneCovec(minv_.transpose().apply(h.coeffs));
}

QuadricForm Projectivity::apply(const QuadricForm& q) const {
    return QuadricForm(minv_.transpose() * q.sym() * minv_);
}

HomPoly Projectivity::apply(const HomPoly& f) const {
    const int m = m_.rows();
    std::vector<Rational> flat;
    flat.reserve(static_cast<std::size_t>(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) flat.push_back(minv_.at(i, j));
    return f.substitute_linear(flat, m);
}

HyperplaneCovec polar_hyperplane(const QuadricForm& q, const ProjPoint& p) {
    std::vector<Rational> v = q.sym().apply(p.coords);
    if (all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; }))
        throw std::domain_error("point is a vertex of the quadric; polar undefined");
    return HyperplaneCovec(std::move(v));
}

ProjPoint pole_of(const QuadricForm& q, const HyperplaneCovec& h) {
    if (!q.smooth()) throw std::domain_error("pole requires a smooth quadric");
    return ProjPoint(adjugate(q.sym()).apply(h.coeffs));
}

QuadricForm dual_quadric(const QuadricForm& q) {
    if (!q.smooth()) throw std::domain_error("dual of a singular quadric");
    return QuadricForm(adjugate(q.sym()));
}

ProjPoint veronese(int d, const ProjPoint& p) {
    if (d < 1) throw std::invalid_argument("veronese degree must be >= 1");
    const int m = static_cast<int>(p.coords.size());
    std::vector<Rational> out;
    for (const Exponents& e : monomial_order(m, d)) {
        Rational v(1);
        for (int i = 0; i < m; ++i)
            for (int k = 0; k < e[i]; ++k) v *= p.coords[i];
        out.push_back(v);
    }
    return ProjPoint(std::move(out));
}

HyperplaneCovec hypersurface_to_hyperplane(int d, const HomPoly& f) {
    if (f.degree() != d) throw std::invalid_argument("degree mismatch in hypersurface lift");
    return HyperplaneCovec(f.coefficient_vector());
}

Projectivity standardize_four_points(const std::array<ProjPoint, 4>& pts) {
    const int m = 3;
    for (const auto& p : pts)
        if (static_cast<int>(p.coords.size()) != m)
            throw std::invalid_argument("standardize_four_points works in the plane");
    RatMatrix base(m, m);
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < m; ++i) base.at(i, j) = pts[j].coords[i];
    if (det(base) == 0) throw std::domain_error("first three points are collinear");
    std::vector<Rational> c = solve(base, pts[3].coords);
    for (const auto& x : c)
        if (x == 0) throw std::domain_error("fourth point is collinear with two of the first three");
    RatMatrix scaled(m, m);
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < m; ++i) scaled.at(i, j) = base.at(i, j) * c[j];
    return Projectivity(inverse(scaled));
}

}  // namespace logtorelli
