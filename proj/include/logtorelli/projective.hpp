#pragma once

#include "logtorelli/matrix.hpp"
#include "logtorelli/numeric.hpp"
#include "logtorelli/poly.hpp"

#include <vector>

namespace logtorelli {

// Point of P^n with exact homogeneous coordinates, not all zero.
struct ProjPoint {
    std::vector<Rational> coords;

    explicit ProjPoint(std::vector<Rational> c);
    int dim() const { return static_cast<int>(coords.size()) - 1; }
    // scales so the first nonzero coordinate is 1
    ProjPoint canonical() const;
};

// Hyperplane of P^n as a projective covector.
struct HyperplaneCovec {
    std::vector<Rational> coeffs;

    explicit HyperplaneCovec(std::vector<Rational> c);
    int dim() const { return static_cast<int>(coeffs.size()) - 1; }
    HyperplaneCovec canonical() const;
    Rational evaluate(const ProjPoint& p) const;
    HomPoly polynomial() const { return HomPoly::linear_form(coeffs); }
};

// u ~ v iff all 2x2 minors of the stacked pair vanish.
bool proj_equal(const std::vector<Rational>& u, const std::vector<Rational>& v);
bool proj_equal(const ProjPoint& a, const ProjPoint& b);
bool proj_equal(const HyperplaneCovec& a, const HyperplaneCovec& b);

// Numeric projective point (complex witnesses from the pencil analysis).
struct NumProjPoint {
    ComplexVec coords;
    // scales the max-modulus coordinate to 1
    NumProjPoint canonical() const;
};

// Degree-2 hypersurface f(x) = sum_{i,j} a_ij x_i x_j with a symmetric
// coefficient matrix (off-diagonal terms counted twice by the symmetry).
class QuadricForm {
public:
    explicit QuadricForm(RatMatrix sym);
    static QuadricForm from_polynomial(const HomPoly& f);

    int dim() const { return sym_.rows() - 1; }
    const RatMatrix& sym() const { return sym_; }
    bool smooth() const { return det(sym_) != 0; }

    Rational evaluate(const ProjPoint& p) const;
    ComplexVal evaluate(const ComplexVec& p) const;
    Rational bilinear(const std::vector<Rational>& u, const std::vector<Rational>& v) const;
    HomPoly polynomial() const;

    bool operator==(const QuadricForm& o) const { return sym_ == o.sym_; }

private:
    RatMatrix sym_;
};

bool proj_equal(const QuadricForm& a, const QuadricForm& b);

// Invertible coordinate change x -> M x of P^n.
class Projectivity {
public:
    explicit Projectivity(RatMatrix m);
    const RatMatrix& matrix() const { return m_; }
    Projectivity inverse_map() const { return Projectivity(inverse(m_)); }

    ProjPoint apply(const ProjPoint& p) const;
    // covector of the image hyperplane {h(M^-1 y) = 0}
    HyperplaneCovec apply(const HyperplaneCovec& h) const;
    // quadric of the image hypersurface, matrix M^-T A M^-1
    QuadricForm apply(const QuadricForm& q) const;
    HomPoly apply(const HomPoly& f) const;

private:
    RatMatrix m_;
    RatMatrix minv_;
};

// sym * p as a covector; errors when sym * p = 0 (p is a vertex).
HyperplaneCovec polar_hyperplane(const QuadricForm& q, const ProjPoint& p);

// adj(sym) * h as a point; requires q smooth.
ProjPoint pole_of(const QuadricForm& q, const HyperplaneCovec& h);

// Quadric of adj(sym); projectively the inverse matrix. Requires q smooth.
QuadricForm dual_quadric(const QuadricForm& q);

// Degree-d Veronese embedding P^n -> P^(N-1), N = C(n+d, d), coordinates in
// monomial_order(n+1, d).
ProjPoint veronese(int d, const ProjPoint& p);

// Covector h on P^(N-1) with h(veronese(d, p)) = f(p) identically.
HyperplaneCovec hypersurface_to_hyperplane(int d, const HomPoly& f);

// Unique projectivity sending four points of P^2 in general position to
// [1,0,0], [0,1,0], [0,0,1], [1,1,1] in order.
Projectivity standardize_four_points(const std::array<ProjPoint, 4>& pts);

}  // namespace logtorelli
