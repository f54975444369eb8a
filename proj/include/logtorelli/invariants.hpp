#pragma once

#include "logtorelli/resolution.hpp"

#include <string>
#include <vector>

namespace logtorelli {

struct ChernData {
    int n = 0;
    int rank = 0;
    std::vector<Int> chern_poly;  // coefficients of 1 + c_1 t + ... + c_n t^n
    Rational slope;               // c_1 / rank

    Int chern_class(int i) const { return chern_poly.at(i); }
};

// Truncation at degree n of prod_j (1 + b_j t) / prod_i (1 + a_i t).
ChernData chern_from_resolution(const GradedResolution& res, int n);

struct StabilityVerdict {
    bool stable = false;
    bool semistable = false;
    Rational b1;
    Rational mu;
    std::string reason;
};

// Slope (semi)stability from the resolution twists: with the targets sorted
// descending, stable iff b_1 < mu, semistable iff b_1 <= mu, and always
// stable when b_1 = ... = b_n. Requires #targets = n + #sources.
StabilityVerdict bohnhorst_spindler(const GradedResolution& res, int n);

// Dimension of the moduli space of stable rank-2 bundles on the plane:
// -c1^2 + 4 c2 - 3.
Int moduli_dimension(const Int& c1, const Int& c2);

}  // namespace logtorelli
