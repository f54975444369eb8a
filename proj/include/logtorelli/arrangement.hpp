#pragma once

#include "logtorelli/pencil.hpp"
#include "logtorelli/projective.hpp"

#include <optional>
#include <string>
#include <vector>

namespace logtorelli {

struct Member {
    int degree;
    HomPoly f;
    std::string label;
};

// Ordered list of pairwise non-proportional hypersurfaces of P^n. The order
// is load-bearing: every downstream matrix uses it.
class Arrangement {
public:
    Arrangement(int ambient_dim, std::vector<Member> members);

    int ambient_dim() const { return n_; }
    int size() const { return static_cast<int>(members_.size()); }
    const std::vector<Member>& members() const { return members_; }
    const Member& member(int i) const { return members_[i]; }

    bool all_degree(int d) const;
    HyperplaneCovec covector(int i) const;   // requires degree 1
    QuadricForm quadric(int i) const;        // requires degree 2

    Arrangement transformed(const Projectivity& tau) const;

private:
    int n_;
    std::vector<Member> members_;
};

enum class NCStatus { Holds, Fails, Unknown };

struct NormalCrossingsReport {
    NCStatus status = NCStatus::Unknown;
    std::string method;
    // failing member subsets (indices into the arrangement)
    std::vector<std::vector<int>> failing_subsets;
    // candidate triple points that could not be decided exactly
    std::vector<NumProjPoint> ambiguous_points;

    bool holds() const { return status == NCStatus::Holds; }
};

// Hyperplanes cross normally iff every k-subset of covectors has rank k,
// k <= n+1. The first failing subset is returned as witness.
NormalCrossingsReport check_nc_hyperplanes(const Arrangement& arr);

// Facade over the exact pencil discriminant criterion.
NormalCrossingsReport check_nc_quadric_pair(const Arrangement& arr);

// A line crosses a smooth conic normally iff the restriction of the conic
// to the line is a binary quadratic with nonzero discriminant.
NormalCrossingsReport check_nc_line_conic(const HyperplaneCovec& line, const QuadricForm& conic);

// Planar arrangements of lines and smooth conics: every pair must pass its
// exact pairwise criterion and no point may lie on three members. Pairwise
// intersections are located numerically; an evaluation inside the ambiguous
// band makes the verdict Unknown instead of guessing.
NormalCrossingsReport check_nc_plane_curves(const Arrangement& arr);

// Degree-d members become hyperplanes of P^(N-1) through the Veronese
// coordinates; order preserved.
Arrangement lift_to_hyperplanes(const Arrangement& arr, int d);

// Deterministic pair of exact points spanning a line of P^2, chosen from
// the covector's pivot pattern.
std::array<ProjPoint, 2> line_span_points(const HyperplaneCovec& line);

}  // namespace logtorelli
