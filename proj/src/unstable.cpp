#include "logtorelli/unstable.hpp"

#include "logtorelli/pencil.hpp"

#include <stdexcept>

namespace logtorelli {

RatMatrix unstable_hyperplane_matrix(const SteinerData& sd, const HyperplaneCovec& h) {
    const int n = sd.n, l = sd.ell, k = sd.steiner_k();
    if (static_cast<int>(h.coeffs.size()) != n + 1) throw std::invalid_argument("candidate dimension mismatch");
    if (k < 1) throw std::invalid_argument("degenerate Steiner data");

    int pivot = 0;
    while (h.coeffs[pivot] == 0) ++pivot;
    std::vector<int> free_vars;
    for (int j = 0; j <= n; ++j)
        if (j != pivot) free_vars.push_back(j);

    // columns: the l-1 functionals e_1 .. e_{l-1} spanning W-dual
    // rows: for each syzygy mu and each residual variable x_j, the
    // x_j-coefficient of  v -> sum_i w_i mu_i f_i(v)  reduced mod h
    RatMatrix m(k * n, l - 1);
    for (int s = 0; s < k; ++s) {
        const auto& mu = sd.syzygies[s];
        for (int c = 0; c < l - 1; ++c) {
            // linear form mu_c * f_c
            std::vector<Rational> lin(n + 1);
            for (int j = 0; j <= n; ++j) lin[j] = mu[c] * sd.line_coeffs.at(c, j);
            // substitute x_pivot = -(1/h_pivot) sum_{j != pivot} h_j x_j
            for (int r = 0; r < n; ++r) {
                int j = free_vars[r];
                m.at(s * n + r, c) = lin[j] - lin[pivot] * h.coeffs[j] / h.coeffs[pivot];
            }
        }
    }
    return m;
}

std::pair<bool, int> is_unstable_hyperplane(const SteinerData& sd, const HyperplaneCovec& h) {
    RatMatrix m = unstable_hyperplane_matrix(sd, h);
    int kd = m.cols() - rank(m);
    return {kd >= 1, kd};
}

std::pair<bool, int> is_unstable_hypersurface(const Arrangement& arr, int d, const HomPoly& candidate) {
    if (d < 2) throw std::invalid_argument("use the hyperplane test directly for degree 1");
    if (!arr.all_degree(d)) throw std::invalid_argument("arrangement members must share the candidate degree");
    if (candidate.degree() != d) throw std::invalid_argument("candidate degree mismatch");
    const int big_n = static_cast<int>(monomial_order(arr.ambient_dim() + 1, d).size());
    if (arr.size() < big_n + 3)
        throw std::invalid_argument("recovery needs at least N+3 members, N = C(n+d, d)");

    Arrangement lifted = lift_to_hyperplanes(arr, d);
    if (!check_nc_hyperplanes(lifted).holds())
        throw std::domain_error("lifted hyperplane arrangement does not cross normally; "
                                "the recovery hypotheses fail");
    SteinerData sd = build_steiner(lifted);
    return is_unstable_hyperplane(sd, hypersurface_to_hyperplane(d, candidate));
}

std::pair<bool, int> is_unstable_conic(const Arrangement& conics, const QuadricForm& candidate) {
    if (!candidate.smooth()) throw std::invalid_argument("candidate conic must be smooth");
    return is_unstable_hypersurface(conics, 2, candidate.polynomial());
}

std::vector<NumProjPoint> section_zero_locus(const QuadricForm& a, const QuadricForm& b) {
    if (!has_normal_crossings_pair(a, b))
        throw std::domain_error("section zero locus needs a normal-crossing pair");
    return analyze_pencil(a, b).vertices;
}

RatMatrix jumping_line_matrix(const QuadricForm& a, const QuadricForm& b, const HyperplaneCovec& line) {
    if (a.dim() != 2 || b.dim() != 2) throw std::invalid_argument("jumping lines are planar");
    auto [p, q] = line_span_points(line);

    // dual presentation rows: (d0 f_i, d1 f_i, d2 f_i, [f_1 or 0]);
    // restricted to s p + t q each linear entry is (L(p), L(q)) and the
    // quadratic entry is (f(p), 2 f(p,q), f(q)).
    struct Lin { Rational s, t; };
    auto build_row = [&](const QuadricForm& f, bool with_quadric,
                         std::array<Lin, 3>& lins, std::array<Rational, 3>& quad) {
        HomPoly poly = f.polynomial();
        for (int j = 0; j < 3; ++j) {
            HomPoly dj = poly.derivative(j);
            lins[j] = {dj.evaluate(p.coords), dj.evaluate(q.coords)};
        }
        if (with_quadric)
            quad = {f.bilinear(p.coords, p.coords), f.bilinear(p.coords, q.coords) * 2,
                    f.bilinear(q.coords, q.coords)};
        else
            quad = {Rational(0), Rational(0), Rational(0)};
    };

    RatMatrix m(6, 7);
    for (int block = 0; block < 2; ++block) {
        std::array<Lin, 3> lins;
        std::array<Rational, 3> quad;
        build_row(block == 0 ? a : b, block == 0, lins, quad);
        const int r0 = 3 * block;
        for (int j = 0; j < 3; ++j) {
            // source (alpha_j s + beta_j t) against entry (lin.s s + lin.t t):
            // s^2 row gets (lin.s, 0), st row (lin.t, lin.s), t^2 row (0, lin.t)
            m.at(r0 + 0, 2 * j) = lins[j].s;
            m.at(r0 + 1, 2 * j) = lins[j].t;
            m.at(r0 + 1, 2 * j + 1) = lins[j].s;
            m.at(r0 + 2, 2 * j + 1) = lins[j].t;
        }
        m.at(r0 + 0, 6) = quad[0];
        m.at(r0 + 1, 6) = quad[1];
        m.at(r0 + 2, 6) = quad[2];
    }
    return m;
}

bool is_jumping_line(const QuadricForm& a, const QuadricForm& b, const HyperplaneCovec& line) {
    if (!has_normal_crossings_pair(a, b))
        throw std::domain_error("jumping-line test needs a normal-crossing pair");
    return rank(jumping_line_matrix(a, b, line)) <= 5;
}

}  // namespace logtorelli
