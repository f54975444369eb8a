#pragma once

#include "logtorelli/numeric.hpp"
#include "logtorelli/projective.hpp"

#include <vector>

namespace logtorelli {

// Full analysis of the pencil a + t b spanned by two smooth quadrics.
// The distinctness decision is exact (discriminant of det(A + tB)); roots,
// vertices and the diagonalizing basis are numeric witnesses.
struct PencilReport {
    UniPoly char_poly;           // det(A + tB), exact
    Rational disc;               // discriminant of char_poly, exact
    bool distinct = false;       // disc != 0
    ComplexVec roots;            // t_i sorted by (Re, Im)
    ComplexVec eigenvalues;      // lambda_i = -t_i, matching order
    std::vector<NumProjPoint> vertices;  // vertex of the singular member at t_i
    ComplexMatrix diag_basis;    // GO with GO^T B GO = I, GO^T A GO = diag
    ComplexVec diag_values;      // the diagonal of GO^T A GO
    double residual = 0.0;       // max relative reconstruction error
};

PencilReport analyze_pencil(const QuadricForm& a, const QuadricForm& b);

// Exact: the pair crosses normally iff det(A + tB) has no repeated root.
bool has_normal_crossings_pair(const QuadricForm& a, const QuadricForm& b);

// The four intersection points of a normal-crossing pair of conics,
// computed in the diagonalizing frame and mapped back (numeric).
std::vector<NumProjPoint> base_points_conics(const QuadricForm& a, const QuadricForm& b);

// (GO, Lambda-diagonal); requires the pencil roots pairwise distinct.
std::pair<ComplexMatrix, ComplexVec> simultaneous_diagonalize(const QuadricForm& a, const QuadricForm& b);

}  // namespace logtorelli
