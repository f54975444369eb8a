#include "logtorelli/resolution.hpp"

#include <algorithm>
#include <stdexcept>

namespace logtorelli {

std::vector<Rational> SteinerData::tensor(const std::vector<Rational>& lambda,
                                          const std::vector<Rational>& v) const {
    if (static_cast<int>(lambda.size()) != ell || static_cast<int>(v.size()) != n + 1)
        throw std::invalid_argument("tensor argument shape mismatch");
    std::vector<Rational> out(ell, Rational(0));
    for (int i = 0; i < ell; ++i) {
        Rational fi(0);
        for (int j = 0; j <= n; ++j) fi += line_coeffs.at(i, j) * v[j];
        out[i] = lambda[i] * fi;
    }
    return out;
}

GradedResolution build_ancona(const Arrangement& arr) {
    const int n = arr.ambient_dim();
    const int l = arr.size();
    std::vector<int> sources(l);
    for (int i = 0; i < l; ++i) sources[i] = -arr.member(i).degree;
    std::vector<int> targets(n + l, 0);
    for (int j = 0; j <= n; ++j) targets[j] = -1;

    PolyMatrix m(n + l, l, n + 1, targets, sources);
    for (int i = 0; i < l; ++i) {
        const HomPoly& f = arr.member(i).f;
        for (int j = 0; j <= n; ++j) m.set(j, i, f.derivative(j));
        if (i < l - 1) m.set(n + 1 + i, i, f);
    }
    return {std::move(sources), std::move(targets), std::move(m)};
}

SteinerData build_steiner(const Arrangement& arr) {
    if (!arr.all_degree(1)) throw std::invalid_argument("Steiner data wants a hyperplane arrangement");
    const int n = arr.ambient_dim();
    const int l = arr.size();
    if (l < n + 2) throw std::invalid_argument("Steiner presentation needs at least n+2 hyperplanes");

    SteinerData sd;
    sd.n = n;
    sd.ell = l;
    sd.line_coeffs = RatMatrix(l, n + 1);
    for (int i = 0; i < l; ++i) {
        auto c = arr.covector(i).coeffs;
        for (int j = 0; j <= n; ++j) sd.line_coeffs.at(i, j) = c[j];
    }
    // syzygies of the linear forms = right kernel of the transposed
    // coefficient matrix
    sd.syzygies = kernel_basis(sd.line_coeffs.transpose());
    if (static_cast<int>(sd.syzygies.size()) != l - n - 1)
        throw std::domain_error("syzygy space has the wrong dimension; the arrangement does not cross normally");
    return sd;
}

GradedResolution build_schwarzenberger(int n, int m) {
    if (n < 1 || m < n) throw std::invalid_argument("schwarzenberger matrix needs m >= n >= 1");
    const int rows = m + 1, cols = m - n + 1;
    std::vector<int> sources(cols, -1), targets(rows, 0);
    PolyMatrix mat(rows, cols, n + 1, targets, sources);
    for (int c = 0; c < cols; ++c)
        for (int v = 0; v <= n; ++v) {
            Exponents e(n + 1, 0);
            e[v] = 1;
            mat.set(c + v, c, HomPoly::monomial(n + 1, e, Rational(1)));
        }
    return {std::move(sources), std::move(targets), std::move(mat)};
}

namespace {

// extends k independent covectors to a full coordinate change whose first k
// coordinates are the given lines
Projectivity frame_from_lines(const std::vector<HyperplaneCovec>& lines) {
    const int k = static_cast<int>(lines.size());
    RatMatrix t(3, 3);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < 3; ++j) t.at(i, j) = lines[i].coeffs[j];
    if (k < 3) {
        // complete with standard basis rows keeping the determinant nonzero
        for (int r = k; r < 3; ++r) {
            for (int cand = 0; cand < 3; ++cand) {
                t.at(r, cand) = 1;
                if (rank(t) == r + 1) break;
                t.at(r, cand) = 0;
            }
        }
    }
    if (det(t) == 0) throw std::domain_error("lines are concurrent; no coordinate frame");
    return Projectivity(std::move(t));
}

HomPoly neg_xk_dk(const QuadricForm& conic, int k) {
    Exponents e(3, 0);
    e[k] = 1;
    HomPoly xk = HomPoly::monomial(3, e, Rational(1));
    return (xk * conic.polynomial().derivative(k)).scaled(Rational(-1));
}

}  // namespace

Ch8Resolution minimal_resolution_ch8(const Arrangement& arr) {
    if (arr.ambient_dim() != 2) throw std::invalid_argument("reduced resolutions are planar");
    std::vector<int> line_idx, conic_idx;
    for (int i = 0; i < arr.size(); ++i) {
        if (arr.member(i).degree == 1) line_idx.push_back(i);
        else if (arr.member(i).degree == 2) conic_idx.push_back(i);
        else throw std::invalid_argument("unsupported member degree");
    }
    if (conic_idx.size() != 1 || line_idx.empty() || line_idx.size() > 3)
        throw std::invalid_argument("supported shapes: a smooth conic with one, two or three lines");
    if (check_nc_plane_curves(arr).status != NCStatus::Holds)
        throw std::domain_error("arrangement does not cross normally");

    std::vector<HyperplaneCovec> lines;
    for (int i : line_idx) lines.push_back(arr.covector(i));
    Projectivity frame = frame_from_lines(lines);
    QuadricForm conic = frame.apply(arr.quadric(conic_idx[0]));
    const int k = static_cast<int>(lines.size());

    std::vector<int> sources{-2};
    std::vector<int> targets;
    std::vector<HomPoly> entries;
    if (k == 1) {
        targets = {-1, -1, 0};
        entries = {conic.polynomial().derivative(1), conic.polynomial().derivative(2), neg_xk_dk(conic, 0)};
    } else if (k == 2) {
        targets = {-1, 0, 0};
        entries = {conic.polynomial().derivative(2), neg_xk_dk(conic, 0), neg_xk_dk(conic, 1)};
    } else {
        targets = {0, 0, 0};
        entries = {neg_xk_dk(conic, 0), neg_xk_dk(conic, 1), neg_xk_dk(conic, 2)};
    }
    PolyMatrix m(3, 1, 3, targets, sources);
    for (int r = 0; r < 3; ++r) m.set(r, 0, entries[r]);
    return {GradedResolution{std::move(sources), std::move(targets), std::move(m)}, frame, conic};
}

}  // namespace logtorelli
