#pragma once

#include "logtorelli/poly.hpp"
#include "logtorelli/rational.hpp"

#include <vector>

namespace logtorelli {

// Dense matrix of exact rationals, row-major.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(int rows, int cols);
    RatMatrix(int rows, int cols, std::vector<Rational> entries);

    static RatMatrix identity(int n);
    static RatMatrix diagonal(const std::vector<Rational>& d);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int r, int c) { return e_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Rational& at(int r, int c) const { return e_[static_cast<std::size_t>(r) * cols_ + c]; }

    RatMatrix operator+(const RatMatrix& o) const;
    RatMatrix operator-(const RatMatrix& o) const;
    RatMatrix operator*(const RatMatrix& o) const;
    RatMatrix scaled(const Rational& s) const;
    RatMatrix transpose() const;
    std::vector<Rational> apply(const std::vector<Rational>& v) const;

    bool operator==(const RatMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }
    bool is_symmetric() const;
    bool is_zero() const;

private:
    int rows_, cols_;
    std::vector<Rational> e_;
};

// Exact rank via fraction-free (Bareiss) elimination.
int rank(const RatMatrix& m);

// Basis of the right null space, each vector scaled to primitive integer
// entries with positive leading sign. Empty iff rank == cols.
std::vector<std::vector<Rational>> kernel_basis(const RatMatrix& m);

Rational det(const RatMatrix& m);

// adj(m) with m * adj(m) = det(m) * I; rank <= n-2 gives the zero matrix.
RatMatrix adjugate(const RatMatrix& m);

RatMatrix inverse(const RatMatrix& m);  // throws on singular

// Unique solution of m x = rhs for invertible m.
std::vector<Rational> solve(const RatMatrix& m, const std::vector<Rational>& rhs);

// Exact coefficients of det(a + t b).
UniPoly char_poly_pencil(const RatMatrix& a, const RatMatrix& b);

// Resultant of p and q via the Sylvester matrix.
Rational resultant(const UniPoly& p, const UniPoly& q);

// Zero iff p has a repeated complex root. Requires degree >= 1.
Rational discriminant(const UniPoly& p);

// Matrix of homogeneous polynomials presenting a graded map
// (+) O(col_twist_j)  ->  (+) O(row_twist_i);  every nonzero entry (i,j) is
// homogeneous of degree row_twist_i - col_twist_j.
class PolyMatrix {
public:
    PolyMatrix(int rows, int cols, int num_vars,
               std::vector<int> row_twists, std::vector<int> col_twists);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int num_vars() const { return num_vars_; }
    const std::vector<int>& row_twists() const { return row_twists_; }
    const std::vector<int>& col_twists() const { return col_twists_; }

    const HomPoly& at(int r, int c) const { return e_[static_cast<std::size_t>(r) * cols_ + c]; }
    void set(int r, int c, HomPoly p);

    RatMatrix evaluate(const std::vector<Rational>& point) const;
    bool degrees_consistent() const;

private:
    int rows_, cols_, num_vars_;
    std::vector<int> row_twists_, col_twists_;
    std::vector<HomPoly> e_;
};

// Scales a rational vector to primitive integer entries, first nonzero > 0.
std::vector<Rational> primitive_vector(std::vector<Rational> v);

}  // namespace logtorelli
