#pragma once

// Test-only reference implementations. Everything here stays independent of
// the library's computational paths: determinants by Laplace expansion,
// pencil polynomials by symbolic cofactors, discriminants by root products.

#include "logtorelli/matrix.hpp"
#include "logtorelli/poly.hpp"
#include "logtorelli/projective.hpp"

#include <functional>
#include <random>
#include <vector>

namespace oracles {

using namespace logtorelli;

inline Rational naive_det(const RatMatrix& m) {
    const int n = m.rows();
    if (n == 1) return m.at(0, 0);
    Rational s(0);
    for (int j = 0; j < n; ++j) {
        if (m.at(0, j) == 0) continue;
        RatMatrix minor(n - 1, n - 1);
        for (int r = 1; r < n; ++r)
            for (int c = 0, cc = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = m.at(r, c);
            }
        Rational t = m.at(0, j) * naive_det(minor);
        s += (j % 2 ? -t : t);
    }
    return s;
}

// det(a + t b) by Laplace expansion over univariate polynomial entries
inline UniPoly naive_pencil_poly(const RatMatrix& a, const RatMatrix& b) {
    const int n = a.rows();
    std::vector<std::vector<UniPoly>> m(n, std::vector<UniPoly>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = UniPoly({a.at(i, j), b.at(i, j)});
    std::function<UniPoly(std::vector<std::vector<UniPoly>>)> lap =
        [&](std::vector<std::vector<UniPoly>> x) -> UniPoly {
        const int k = static_cast<int>(x.size());
        if (k == 1) return x[0][0];
        UniPoly s;
        for (int j = 0; j < k; ++j) {
            std::vector<std::vector<UniPoly>> minor;
            for (int r = 1; r < k; ++r) {
                std::vector<UniPoly> row;
                for (int c = 0; c < k; ++c)
                    if (c != j) row.push_back(x[r][c]);
                minor.push_back(std::move(row));
            }
            UniPoly t = x[0][j] * lap(minor);
            s = (j % 2) ? s - t : s + t;
        }
        return s;
    };
    return lap(m);
}

// discriminant of a monic product prod (t - r_i) as lc^(2d-2) prod (r_i-r_j)^2
inline Rational disc_from_roots(const std::vector<Rational>& roots, const Rational& lc) {
    Rational d(1);
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = i + 1; j < roots.size(); ++j) {
            Rational diff = roots[i] - roots[j];
            d *= diff * diff;
        }
    Rational scale(1);
    for (std::size_t k = 0; k + 1 < roots.size(); ++k) scale *= lc * lc;
    return d * scale;
}

inline UniPoly poly_from_roots(const std::vector<Rational>& roots, const Rational& lc) {
    UniPoly p = UniPoly::constant(lc);
    for (const auto& r : roots) p = p * UniPoly({-r, Rational(1)});
    return p;
}

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}

    Rational rational(int lo = -9, int hi = 9, int max_den = 4) {
        std::uniform_int_distribution<int> num(lo, hi);
        std::uniform_int_distribution<int> den(1, max_den);
        return Rational(num(gen), den(gen));
    }
    Rational nonzero_rational(int lo = -9, int hi = 9, int max_den = 4) {
        while (true) {
            Rational r = rational(lo, hi, max_den);
            if (r != 0) return r;
        }
    }
    RatMatrix matrix(int rows, int cols) {
        RatMatrix m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m.at(i, j) = rational();
        return m;
    }
    RatMatrix invertible(int n) {
        while (true) {
            RatMatrix m = matrix(n, n);
            if (det(m) != 0) return m;
        }
    }
    RatMatrix symmetric(int n) {
        RatMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) m.at(i, j) = m.at(j, i) = rational();
        return m;
    }
    QuadricForm smooth_quadric(int dim) {
        while (true) {
            RatMatrix m = symmetric(dim + 1);
            if (det(m) != 0) return QuadricForm(m);
        }
    }
    HyperplaneCovec line(int dim = 2) {
        while (true) {
            std::vector<Rational> c(dim + 1);
            bool nz = false;
            for (auto& x : c) {
                x = rational();
                nz |= (x != 0);
            }
            if (nz) return HyperplaneCovec(std::move(c));
        }
    }
    ProjPoint point(int dim) {
        while (true) {
            std::vector<Rational> c(dim + 1);
            bool nz = false;
            for (auto& x : c) {
                x = rational();
                nz |= (x != 0);
            }
            if (nz) return ProjPoint(std::move(c));
        }
    }
};

inline QuadricForm conic3(const Rational& d00, const Rational& d01, const Rational& d02,
                          const Rational& d11, const Rational& d12, const Rational& d22) {
    RatMatrix m(3, 3);
    m.at(0, 0) = d00;
    m.at(1, 1) = d11;
    m.at(2, 2) = d22;
    m.at(0, 1) = m.at(1, 0) = d01;
    m.at(0, 2) = m.at(2, 0) = d02;
    m.at(1, 2) = m.at(2, 1) = d12;
    return QuadricForm(m);
}

}  // namespace oracles
