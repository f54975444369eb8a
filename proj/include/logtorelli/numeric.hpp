#pragma once

#include "logtorelli/matrix.hpp"
#include "logtorelli/poly.hpp"

#include <complex>
#include <vector>

namespace logtorelli {

// Floating-point complex layer. Every decision stays on the exact side;
// this module only produces witnesses (roots, eigenvectors, sample points).
using ComplexVal = std::complex<double>;
using ComplexVec = std::vector<ComplexVal>;
using ComplexMatrix = std::vector<ComplexVec>;  // row-major rows

struct Tolerances {
    double root_eval = 1e-9;      // relative residual of a numeric root
    double residual = 1e-8;       // relative reconstruction residual
    double on_quadric = 1e-9;     // point-on-hypersurface witnesses
    double triple_low = 1e-9;     // below: counts as a triple point
    double triple_high = 1e-6;    // between low and high: ambiguous band
    double genericity = 1e-8;     // open-condition vanishing threshold
};

Tolerances& tolerances();  // process-wide, mutable by the CLI

bool is_finite(const ComplexVal& z);

// All complex roots of p with multiplicity, via eigenvalues of the balanced
// companion matrix followed by Newton polishing. Roots whose residual stays
// above tolerances().root_eval relative to the coefficient scale trigger a
// non-convergence error. Requires degree >= 1.
ComplexVec complex_roots(const UniPoly& p);

ComplexMatrix to_complex(const RatMatrix& m);
ComplexMatrix cmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix ctranspose(const ComplexMatrix& a);
ComplexMatrix cinverse(const ComplexMatrix& a);
double cnorm_inf(const ComplexMatrix& a);

// Eigen-decomposition of a general complex matrix; returns (values, vectors)
// with vectors as columns of the returned matrix.
std::pair<ComplexVec, ComplexMatrix> complex_eig(const ComplexMatrix& m);

// Principal square root: nonnegative real part, positive imaginary part on
// the negative real axis.
ComplexVal principal_sqrt(const ComplexVal& z);

// Distance between projective points: sine of the Hermitian angle.
double projective_distance(const ComplexVec& u, const ComplexVec& v);

}  // namespace logtorelli
