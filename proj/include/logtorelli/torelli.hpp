#pragma once

#include "logtorelli/arrangement.hpp"
#include "logtorelli/pencil.hpp"
#include "logtorelli/projective.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace logtorelli {

enum class Equivalence { Equivalent, NotEquivalent, Indeterminate };

std::string to_string(Equivalence e);

// Unordered point pair on a line, stored as a binary quadratic (s^2, st,
// t^2 coefficients) up to scale; the zero set is the pair.
struct PointPairForm {
    std::array<Rational, 3> coeffs;
};

bool proportional(const PointPairForm& a, const PointPairForm& b);

struct PoleWitness {
    ProjPoint pole_a;
    ProjPoint pole_b;
};

struct DualPencilWitness {
    RatMatrix adj_a, adj_b, adj_c, adj_d;
    int stacked_rank = 0;  // rank of the four vectorized adjugates; 2 = same span
};

struct PointPairWitness {
    HyperplaneCovec jump_line_a;
    HyperplaneCovec jump_line_b;
    PointPairForm pair_a;
    PointPairForm pair_b;
};

// Cubic whose partials span the net x_0 d_0 f, x_1 d_1 f, x_2 d_2 f.
struct CubicLift {
    HomPoly g{3, 3};
    std::vector<Rational> solution;  // (a_0,a_1,a_2,b_0,b_1,b_2,c_0,c_1,c_2)
    int system_rank = 0;
    bool span_certified = false;
};

using TorelliWitness = std::variant<std::monostate, PoleWitness, DualPencilWitness, PointPairWitness, CubicLift>;

struct TorelliVerdict {
    Equivalence status = Equivalence::Indeterminate;
    std::string case_tag;
    TorelliWitness witness;
    std::vector<std::string> caveats;
};

// Every single smooth quadric yields one and the same bundle.
TorelliVerdict decide_single_quadric(const QuadricForm& q1, const QuadricForm& q2);

// Pairs of smooth quadrics with normal crossings are equivalent iff their
// dual pencils span the same plane of symmetric matrices (exact rank test);
// when the span matches but one of the isomorphism-construction open
// conditions vanishes in the diagonalized frame, the verdict refuses to
// commit and returns Indeterminate.
TorelliVerdict decide_pair_quadrics(const QuadricForm& a, const QuadricForm& b,
                                    const QuadricForm& c, const QuadricForm& d);

// A hyperplane plus a smooth quadric is classified by the pole of the
// hyperplane: equivalent iff the poles agree projectively (exact).
TorelliVerdict decide_hyperplane_quadric(const HyperplaneCovec& h, const QuadricForm& q,
                                         const HyperplaneCovec& h2, const QuadricForm& q2);

// Two lines plus a smooth conic: the invariant is the polar line of the
// line-line vertex together with the restricted point pair (exact).
TorelliVerdict decide_conic_two_lines(const HyperplaneCovec& r1, const HyperplaneCovec& r2,
                                      const QuadricForm& conic,
                                      const HyperplaneCovec& s1, const HyperplaneCovec& s2,
                                      const QuadricForm& conic2);

// The 9x9 system in the conic coefficients whose kernel produces the cubic.
RatMatrix three_lines_conic_system(const QuadricForm& conic);

// Cubic lift for the coordinate triangle plus a smooth conic. Requires the
// arrangement {x0, x1, x2, conic} to cross normally. Generic conics give a
// rank-8 system with a one-dimensional kernel; diagonal conics are handled
// by the canonical symmetric solution.
CubicLift lift_three_lines_conic(const QuadricForm& conic);

// General triangle: standardized to the coordinate frame first; the lift is
// returned in that frame together with the coordinate change.
std::pair<CubicLift, Projectivity> lift_three_lines_conic(const Arrangement& arr);

// Exposed for direct testing: evaluates the diagonalized-frame open
// conditions; returns the label of a vanishing condition, if any.
std::optional<std::string> vanishing_genericity_condition(const ComplexVec& a, const ComplexVec& b,
                                                          const ComplexVec& c, const ComplexVec& d);

}  // namespace logtorelli
