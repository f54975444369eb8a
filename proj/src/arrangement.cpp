#include "logtorelli/arrangement.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace logtorelli {

Arrangement::Arrangement(int ambient_dim, std::vector<Member> members)
    : n_(ambient_dim), members_(std::move(members)) {
    if (n_ < 1) throw std::invalid_argument("ambient dimension must be >= 1");
    if (members_.empty()) throw std::invalid_argument("arrangement needs at least one member");
    for (const auto& m : members_) {
        if (m.f.num_vars() != n_ + 1)
            throw std::invalid_argument("member polynomial has the wrong number of variables");
        if (m.f.is_zero() || m.f.degree() != m.degree)
            throw std::invalid_argument("member polynomial does not match its declared degree");
    }
    for (std::size_t i = 0; i < members_.size(); ++i)
        for (std::size_t j = i + 1; j < members_.size(); ++j) {
            if (members_[i].degree == members_[j].degree &&
                proj_equal(members_[i].f.coefficient_vector(), members_[j].f.coefficient_vector()))
                throw std::invalid_argument("arrangement members must be pairwise distinct hypersurfaces");
        }
}

bool Arrangement::all_degree(int d) const {
    return std::all_of(members_.begin(), members_.end(), [&](const Member& m) { return m.degree == d; });
}

HyperplaneCovec Arrangement::covector(int i) const {
    const Member& m = members_[i];
    if (m.degree != 1) throw std::invalid_argument("member is not a hyperplane");
    return HyperplaneCovec(m.f.coefficient_vector());
}

QuadricForm Arrangement::quadric(int i) const {
    const Member& m = members_[i];
    if (m.degree != 2) throw std::invalid_argument("member is not a quadric");
    return QuadricForm::from_polynomial(m.f);
}

Arrangement Arrangement::transformed(const Projectivity& tau) const {
    std::vector<Member> out;
    out.reserve(members_.size());
    for (const auto& m : members_) out.push_back({m.degree, tau.apply(m.f), m.label});
    return Arrangement(n_, std::move(out));
}

NormalCrossingsReport check_nc_hyperplanes(const Arrangement& arr) {
    if (!arr.all_degree(1)) throw std::invalid_argument("check_nc_hyperplanes wants degree-1 members");
    const int l = arr.size(), n = arr.ambient_dim();
    NormalCrossingsReport rep;
    rep.method = "subset-rank";
    std::vector<std::vector<Rational>> rows;
    rows.reserve(l);
    for (int i = 0; i < l; ++i) rows.push_back(arr.covector(i).coeffs);

    const int kmax = std::min(l, n + 1);
    std::vector<int> subset;
    std::function<bool(int, int)> scan = [&](int start, int k) {
        if (static_cast<int>(subset.size()) == k) {
            RatMatrix m(k, n + 1);
            for (int r = 0; r < k; ++r)
                for (int c = 0; c <= n; ++c) m.at(r, c) = rows[subset[r]][c];
            if (rank(m) < k) {
                rep.failing_subsets.push_back(subset);
                return false;
            }
            return true;
        }
        for (int i = start; i < l; ++i) {
            subset.push_back(i);
            bool ok = scan(i + 1, k);
            subset.pop_back();
            if (!ok) return false;
        }
        return true;
    };
    for (int k = 2; k <= kmax; ++k)
        if (!scan(0, k)) {
            rep.status = NCStatus::Fails;
            return rep;
        }
    rep.status = NCStatus::Holds;
    return rep;
}

NormalCrossingsReport check_nc_quadric_pair(const Arrangement& arr) {
    if (arr.size() != 2 || !arr.all_degree(2))
        throw std::invalid_argument("check_nc_quadric_pair wants exactly two quadrics");
    QuadricForm a = arr.quadric(0), b = arr.quadric(1);
    if (!a.smooth() || !b.smooth()) throw std::domain_error("quadric pair members must be smooth");
    NormalCrossingsReport rep;
    rep.method = "pencil-discriminant";
    rep.status = has_normal_crossings_pair(a, b) ? NCStatus::Holds : NCStatus::Fails;
    if (rep.status == NCStatus::Fails) rep.failing_subsets.push_back({0, 1});
    return rep;
}

std::array<ProjPoint, 2> line_span_points(const HyperplaneCovec& line) {
    if (line.dim() != 2) throw std::invalid_argument("line_span_points works in the plane");
    int pivot = 0;
    while (line.coeffs[pivot] == 0) ++pivot;
    std::array<int, 2> others{};
    int k = 0;
    for (int j = 0; j < 3; ++j)
        if (j != pivot) others[k++] = j;
    auto basis_point = [&](int j) {
        std::vector<Rational> v(3, Rational(0));
        v[j] = line.coeffs[pivot];
        v[pivot] = -line.coeffs[j];
        return ProjPoint(std::move(v));
    };
    return {basis_point(others[0]), basis_point(others[1])};
}

namespace {

// binary restriction q(s, t) = conic(s P + t Q) as (s^2, st, t^2) coefficients
std::array<Rational, 3> restrict_conic(const QuadricForm& conic, const ProjPoint& p, const ProjPoint& q) {
    return {conic.bilinear(p.coords, p.coords),
            conic.bilinear(p.coords, q.coords) * 2,
            conic.bilinear(q.coords, q.coords)};
}

}  // namespace

NormalCrossingsReport check_nc_line_conic(const HyperplaneCovec& line, const QuadricForm& conic) {
    if (!conic.smooth()) throw std::domain_error("line/conic crossing test needs a smooth conic");
    auto [p, q] = line_span_points(line);
    auto bq = restrict_conic(conic, p, q);
    NormalCrossingsReport rep;
    rep.method = "restriction-discriminant";
    Rational disc = bq[1] * bq[1] - bq[0] * bq[2] * 4;
    rep.status = disc != 0 ? NCStatus::Holds : NCStatus::Fails;
    return rep;
}

NormalCrossingsReport check_nc_plane_curves(const Arrangement& arr) {
    if (arr.ambient_dim() != 2) throw std::invalid_argument("plane-curve crossing check is planar");
    const int l = arr.size();
    NormalCrossingsReport rep;
    rep.method = "pairwise-exact+numeric-triple-check";
    for (int i = 0; i < l; ++i) {
        int d = arr.member(i).degree;
        if (d != 1 && d != 2) throw std::invalid_argument("only lines and conics are supported");
        if (d == 2 && !arr.quadric(i).smooth()) throw std::domain_error("conic members must be smooth");
    }

    // pairwise exact criteria
    for (int i = 0; i < l; ++i)
        for (int j = i + 1; j < l; ++j) {
            int di = arr.member(i).degree, dj = arr.member(j).degree;
            bool ok = true;
            if (di == 1 && dj == 1) {
                RatMatrix m(2, 3);
                for (int c = 0; c < 3; ++c) {
                    m.at(0, c) = arr.covector(i).coeffs[c];
                    m.at(1, c) = arr.covector(j).coeffs[c];
                }
                ok = rank(m) == 2;
            } else if (di == 2 && dj == 2) {
                ok = has_normal_crossings_pair(arr.quadric(i), arr.quadric(j));
            } else {
                const auto& line = di == 1 ? arr.covector(i) : arr.covector(j);
                const auto& conic = di == 1 ? arr.quadric(j) : arr.quadric(i);
                ok = check_nc_line_conic(line, conic).holds();
            }
            if (!ok) {
                rep.status = NCStatus::Fails;
                rep.failing_subsets.push_back({i, j});
                return rep;
            }
        }
    if (l < 3) {
        rep.status = NCStatus::Holds;
        return rep;
    }

    // triple-point sweep over pairwise intersections
    auto eval_members = [&](const ComplexVec& pt, int i, int j) -> int {
        // returns +1 ok, 0 triple point, -1 ambiguous
        for (int k = 0; k < l; ++k) {
            if (k == i || k == j) continue;
            const HomPoly& f = arr.member(k).f;
            double scale = 0.0;
            for (const auto& [e, c] : f.terms()) scale += std::abs(to_double(c));
            double v = std::abs(f.evaluate(pt)) / std::max(scale, 1e-300);
            if (v < tolerances().triple_low) {
                rep.failing_subsets.push_back({i, j, k});
                return 0;
            }
            if (v < tolerances().triple_high) {
                rep.ambiguous_points.push_back(NumProjPoint{pt});
                return -1;
            }
        }
        return +1;
    };

    bool ambiguous = false;
    for (int i = 0; i < l; ++i)
        for (int j = i + 1; j < l; ++j) {
            int di = arr.member(i).degree, dj = arr.member(j).degree;
            std::vector<ComplexVec> pts;
            if (di == 1 && dj == 1) {
                // exact cross product, then exact evaluation of the others
                const auto& a = arr.covector(i).coeffs;
                const auto& b = arr.covector(j).coeffs;
                std::vector<Rational> x{a[1] * b[2] - a[2] * b[1],
                                        a[2] * b[0] - a[0] * b[2],
                                        a[0] * b[1] - a[1] * b[0]};
                bool triple = false;
                for (int k = 0; k < l && !triple; ++k) {
                    if (k == i || k == j) continue;
                    if (arr.member(k).f.evaluate(x) == 0) {
                        rep.failing_subsets.push_back({i, j, k});
                        triple = true;
                    }
                }
                if (triple) {
                    rep.status = NCStatus::Fails;
                    return rep;
                }
                continue;
            } else if (di == 2 && dj == 2) {
                for (const auto& p : base_points_conics(arr.quadric(i), arr.quadric(j)))
                    pts.push_back(p.coords);
            } else {
                const auto& line = di == 1 ? arr.covector(i) : arr.covector(j);
                const auto& conic = di == 1 ? arr.quadric(j) : arr.quadric(i);
                auto [p, q] = line_span_points(line);
                auto bq = restrict_conic(conic, p, q);
                UniPoly uni({bq[2], bq[1], bq[0]});  // in z = s/t
                std::vector<ComplexVal> zs;
                if (uni.degree() >= 1) zs = complex_roots(uni);
                for (const auto& z : zs) {
                    ComplexVec pt(3);
                    for (int c = 0; c < 3; ++c)
                        pt[c] = z * to_double(p.coords[c]) + to_double(q.coords[c]);
                    pts.push_back(NumProjPoint{pt}.canonical().coords);
                }
                if (bq[0] == 0) {  // the direction point P is on the conic
                    ComplexVec pt(3);
                    for (int c = 0; c < 3; ++c) pt[c] = to_double(p.coords[c]);
                    pts.push_back(pt);
                }
            }
            for (const auto& pt : pts) {
                int r = eval_members(pt, i, j);
                if (r == 0) {
                    rep.status = NCStatus::Fails;
                    return rep;
                }
                if (r < 0) ambiguous = true;
            }
        }
    rep.status = ambiguous ? NCStatus::Unknown : NCStatus::Holds;
    return rep;
}

Arrangement lift_to_hyperplanes(const Arrangement& arr, int d) {
    if (!arr.all_degree(d)) throw std::invalid_argument("lift requires all members of the common degree");
    const int big_n = static_cast<int>(monomial_order(arr.ambient_dim() + 1, d).size());
    std::vector<Member> out;
    out.reserve(arr.size());
    for (const auto& m : arr.members()) {
        HyperplaneCovec h = hypersurface_to_hyperplane(d, m.f);
        out.push_back({1, HomPoly::linear_form(h.coeffs), m.label});
    }
    return Arrangement(big_n - 1, std::move(out));
}

}  // namespace logtorelli
