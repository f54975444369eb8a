#pragma once

#include "logtorelli/resolution.hpp"

#include <string>
#include <vector>

namespace logtorelli {

struct UnstableHit {
    int candidate_index;      // position in the scanned candidate list
    int kernel_dim;
};

struct UnstableScanReport {
    int n = 0;
    int ell = 0;
    int steiner_k = 0;
    int candidates_tested = 0;
    std::vector<UnstableHit> hits;
    std::vector<std::string> caveats;
};

// Finite detector behind the dual Steiner sequence restricted to a
// hyperplane: h is unstable iff the (k*n) x (l-1) map
//   W-dual  ->  I-dual (x) { linear forms mod h }
// built from the fundamental tensor has a nontrivial exact kernel.
std::pair<bool, int> is_unstable_hyperplane(const SteinerData& sd, const HyperplaneCovec& h);

// The exact matrix of that map (exposed for re-checkable certificates).
RatMatrix unstable_hyperplane_matrix(const SteinerData& sd, const HyperplaneCovec& h);

// Conic detector through the quadratic Veronese: lift the arrangement and
// the candidate to hyperplanes of P^5 and run the hyperplane test there.
// Requires l >= 9 and the lifted arrangement to cross normally.
std::pair<bool, int> is_unstable_conic(const Arrangement& conics, const QuadricForm& candidate);

// Same machinery for equal degree d >= 2 (the planar conic case is d = 2):
// the lift lands in P^(N-1), N = C(n+d, d), and needs l >= N+3 members.
std::pair<bool, int> is_unstable_hypersurface(const Arrangement& arr, int d, const HomPoly& candidate);

// Zero locus of the canonical section of the log bundle of a
// normal-crossing pair: the n+1 pencil vertices (numeric witnesses).
std::vector<NumProjPoint> section_zero_locus(const QuadricForm& a, const QuadricForm& b);

// A line jumps for the normalized log bundle of a normal-crossing pair of
// conics iff the 6x7 restriction of the dual presentation to the line drops
// rank (rank <= 5). Exact.
bool is_jumping_line(const QuadricForm& a, const QuadricForm& b, const HyperplaneCovec& line);

// The 6x7 exact matrix of the induced map on sections along the line.
RatMatrix jumping_line_matrix(const QuadricForm& a, const QuadricForm& b, const HyperplaneCovec& line);

}  // namespace logtorelli
