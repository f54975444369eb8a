#pragma once

#include "logtorelli/arrangement.hpp"
#include "logtorelli/matrix.hpp"

#include <vector>

namespace logtorelli {

// Length-one graded resolution  0 -> (+) O(a_i) -> (+) O(b_j) -> E -> 0.
// The matrix is stored in presentation orientation: rows follow the targets
// (b twists), columns the sources (a twists), so column i is the image of
// the i-th source generator.
struct GradedResolution {
    std::vector<int> source_twists;  // a_i
    std::vector<int> target_twists;  // b_j
    PolyMatrix matrix;

    int rank() const { return static_cast<int>(target_twists.size() - source_twists.size()); }
};

// Presentation data of the logarithmic bundle of a normal-crossing
// hyperplane arrangement with l >= n+2: the syzygy space
// I = { lambda : sum lambda_i f_i = 0 } of dimension l-n-1, the trace
// hyperplane W = { sum lambda_i = 0 }, and the tensor
// (lambda, v) -> (lambda_1 f_1(v), ..., lambda_l f_l(v)) taking values in W.
struct SteinerData {
    int n = 0;
    int ell = 0;
    RatMatrix line_coeffs;                        // l x (n+1), row i = f_i
    std::vector<std::vector<Rational>> syzygies;  // basis of I, each length l

    int steiner_k() const { return static_cast<int>(syzygies.size()); }
    // (lambda_1 f_1(v), ..., lambda_l f_l(v))
    std::vector<Rational> tensor(const std::vector<Rational>& lambda,
                                 const std::vector<Rational>& v) const;
};

// The l x (n+l) presentation of the log bundle of any arrangement: row i
// carries the n+1 partials of f_i and an f_i diagonal block whose last row
// is dropped by the Euler relation. Stored transposed (presentation
// orientation), sources O(-d_i), targets O(-1)^(n+1) (+) O^(l-1).
GradedResolution build_ancona(const Arrangement& arr);

SteinerData build_steiner(const Arrangement& arr);

// Banded (m+1) x (m-n+1) matrix of variables with column j carrying
// x_0..x_n in rows j..j+n; presents the degree-m Steiner bundle of a
// rational normal curve. Requires m >= n.
GradedResolution build_schwarzenberger(int n, int m);

// Minimal resolutions for the planar shapes {line, conic},
// {2 lines, conic}, {3 lines, conic}; lines are moved to coordinate
// hyperplanes first and the closed-form reduced column is emitted.
// The returned resolution is in the transformed frame.
struct Ch8Resolution {
    GradedResolution resolution;
    Projectivity frame;   // coordinate change that was applied
    QuadricForm conic;    // the conic in the transformed frame
};
Ch8Resolution minimal_resolution_ch8(const Arrangement& arr);

}  // namespace logtorelli
