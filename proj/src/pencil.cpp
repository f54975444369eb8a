#include "logtorelli/pencil.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace logtorelli {

namespace {

void require_smooth_pair(const QuadricForm& a, const QuadricForm& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("quadrics live in different spaces");
    if (!a.smooth() || !b.smooth()) throw std::domain_error("pencil analysis requires smooth quadrics");
}

ComplexVal bilinear(const ComplexMatrix& m, const ComplexVec& u, const ComplexVec& v) {
    ComplexVal s(0.0, 0.0);
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) s += u[i] * m[i][j] * v[j];
    return s;
}

}  // namespace

PencilReport analyze_pencil(const QuadricForm& a, const QuadricForm& b) {
    require_smooth_pair(a, b);
    if (proj_equal(a, b)) throw std::domain_error("pencil needs two projectively distinct quadrics");
    const int m = a.dim() + 1;

    PencilReport rep;
    rep.char_poly = char_poly_pencil(a.sym(), b.sym());
    rep.disc = discriminant(rep.char_poly);
    rep.distinct = rep.disc != 0;
    rep.roots = complex_roots(rep.char_poly);
    rep.eigenvalues.resize(rep.roots.size());
    for (std::size_t i = 0; i < rep.roots.size(); ++i) rep.eigenvalues[i] = -rep.roots[i];
    if (!rep.distinct) return rep;

    // vertices: v_i spans ker(A + t_i B), i.e. the t_i-eigenspace of -B^-1 A
    RatMatrix neg_binv_a = inverse(b.sym()) * a.sym();
    ComplexMatrix op = to_complex(neg_binv_a.scaled(Rational(-1)));
    auto [vals, vecs] = complex_eig(op);

    std::vector<int> pick(rep.roots.size(), -1);
    std::vector<bool> used(vals.size(), false);
    for (std::size_t i = 0; i < rep.roots.size(); ++i) {
        double best = 0.0;
        for (std::size_t k = 0; k < vals.size(); ++k) {
            if (used[k]) continue;
            double dist = std::abs(vals[k] - rep.roots[i]);
            if (pick[i] < 0 || dist < best) { pick[i] = static_cast<int>(k); best = dist; }
        }
        used[pick[i]] = true;
    }

    ComplexMatrix bc = to_complex(b.sym());
    ComplexMatrix ac = to_complex(a.sym());
    rep.diag_basis.assign(m, ComplexVec(m));
    double scale_a = cnorm_inf(ac), scale_b = cnorm_inf(bc);
    for (std::size_t i = 0; i < rep.roots.size(); ++i) {
        ComplexVec v(m);
        for (int r = 0; r < m; ++r) v[r] = vecs[r][pick[i]];
        rep.vertices.push_back(NumProjPoint{v}.canonical());
        ComplexVal q = bilinear(bc, v, v);
        double vnorm = 0.0;
        for (const auto& z : v) vnorm += std::norm(z);
        if (std::abs(q) < 1e-12 * vnorm * std::max(1.0, scale_b))
            throw std::runtime_error("numeric isotropy: <v, Bv> ~ 0 despite distinct eigenvalues; "
                                     "the eigen-decomposition broke down");
        ComplexVal s = principal_sqrt(q);
        for (int r = 0; r < m; ++r) rep.diag_basis[r][i] = v[r] / s;
    }
    rep.diag_values = rep.eigenvalues;

    ComplexMatrix got = ctranspose(rep.diag_basis);
    ComplexMatrix ra = cmul(cmul(got, ac), rep.diag_basis);
    ComplexMatrix rb = cmul(cmul(got, bc), rep.diag_basis);
    for (int i = 0; i < m; ++i) {
        ra[i][i] -= rep.diag_values[i];
        rb[i][i] -= 1.0;
    }
    rep.residual = std::max(cnorm_inf(ra) / std::max(1.0, scale_a),
                            cnorm_inf(rb) / std::max(1.0, scale_b));
    return rep;
}

bool has_normal_crossings_pair(const QuadricForm& a, const QuadricForm& b) {
    require_smooth_pair(a, b);
    UniPoly p = char_poly_pencil(a.sym(), b.sym());
    return discriminant(p) != 0;
}

std::vector<NumProjPoint> base_points_conics(const QuadricForm& a, const QuadricForm& b) {
    if (a.dim() != 2) throw std::invalid_argument("base point extraction is planar");
    PencilReport rep = analyze_pencil(a, b);
    if (!rep.distinct) throw std::domain_error("pencil has a repeated root; no four distinct base points");
    const ComplexVal l0 = rep.diag_values[0], l1 = rep.diag_values[1], l2 = rep.diag_values[2];
    ComplexVal s0 = principal_sqrt(l2 - l1);
    ComplexVal s1 = principal_sqrt(l0 - l2);
    ComplexVal s2 = principal_sqrt(l1 - l0);
    std::vector<NumProjPoint> pts;
    for (int sign1 : {+1, -1})
        for (int sign2 : {+1, -1}) {
            ComplexVec y{s0, double(sign1) * s1, double(sign2) * s2};
            ComplexVec x(3, ComplexVal(0.0, 0.0));
            for (int r = 0; r < 3; ++r)
                for (int c = 0; c < 3; ++c) x[r] += rep.diag_basis[r][c] * y[c];
            pts.push_back(NumProjPoint{x}.canonical());
        }
    return pts;
}

std::pair<ComplexMatrix, ComplexVec> simultaneous_diagonalize(const QuadricForm& a, const QuadricForm& b) {
    PencilReport rep = analyze_pencil(a, b);
    if (!rep.distinct) throw std::domain_error("repeated pencil eigenvalue; congruence diagonalization refused");
    return {rep.diag_basis, rep.diag_values};
}

}  // namespace logtorelli
