#pragma once

#include "logtorelli/rational.hpp"

#include <complex>
#include <map>
#include <vector>

namespace logtorelli {

// Exponent vector of a monomial; length = number of variables, entries sum
// to the polynomial degree.
using Exponents = std::vector<int>;

// Graded lexicographic order with x0 > x1 > ... > xn. Comparator returns
// "a comes before b" so that std::map iteration runs from x0^d downwards.
struct GradedLexBefore {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

// The fixed coordinate order for degree-d monomials in n+1 variables.
// The quadratic planar case uses the square-first order
// (x0^2, x1^2, x2^2, x0x1, x0x2, x1x2); everything else is graded-lex.
std::vector<Exponents> monomial_order(int num_vars, int degree);

// Homogeneous polynomial over the rationals. Zero coefficients are never
// stored; the zero polynomial still remembers its ambient degree.
class HomPoly {
public:
    HomPoly(int num_vars, int degree);

    static HomPoly monomial(int num_vars, Exponents e, const Rational& c);
    static HomPoly linear_form(const std::vector<Rational>& coeffs);

    int num_vars() const { return num_vars_; }
    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, Rational, GradedLexBefore>& terms() const { return terms_; }

    Rational coeff(const Exponents& e) const;
    void add_term(const Exponents& e, const Rational& c);

    HomPoly operator+(const HomPoly& o) const;
    HomPoly operator-(const HomPoly& o) const;
    HomPoly operator*(const HomPoly& o) const;
    HomPoly scaled(const Rational& c) const;

    HomPoly derivative(int var) const;

    Rational evaluate(const std::vector<Rational>& point) const;
    std::complex<double> evaluate(const std::vector<std::complex<double>>& point) const;

    // Substitutes x_i = sum_j m(i,j) y_j given the (n+1)^2 row-major
    // substitution coefficients; the result is homogeneous of the same degree.
    HomPoly substitute_linear(const std::vector<Rational>& m, int mat_dim) const;

    // Coefficients in the fixed monomial_order(), cross terms folded.
    std::vector<Rational> coefficient_vector() const;

    bool operator==(const HomPoly& o) const;
    std::string to_string() const;

private:
    int num_vars_;
    int degree_;
    std::map<Exponents, Rational, GradedLexBefore> terms_;
};

// Dense univariate polynomial, coefficients ascending by degree. The zero
// polynomial has an empty coefficient list.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);

    static UniPoly constant(const Rational& c);

    bool is_zero() const { return c_.empty(); }
    int degree() const;  // -1 for the zero polynomial
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int k) const;
    Rational leading() const;

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly scaled(const Rational& c) const;
    UniPoly derivative() const;

    Rational evaluate(const Rational& t) const;
    std::complex<double> evaluate(const std::complex<double>& t) const;

    bool operator==(const UniPoly& o) const;
    std::string to_string() const;

private:
    void normalize();
    std::vector<Rational> c_;
};

}  // namespace logtorelli
