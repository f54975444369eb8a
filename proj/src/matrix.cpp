#include "logtorelli/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace logtorelli {

RatMatrix::RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols, Rational(0)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix shape");
}

RatMatrix::RatMatrix(int rows, int cols, std::vector<Rational> entries) : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != static_cast<std::size_t>(rows) * cols) throw std::invalid_argument("entry count mismatch");
}

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::diagonal(const std::vector<Rational>& d) {
    RatMatrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (std::size_t i = 0; i < d.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return m;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch in +");
    RatMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const { return *this + o.scaled(Rational(-1)); }

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("shape mismatch in *");
    RatMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            if (at(i, k) == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
        }
    return r;
}

RatMatrix RatMatrix::scaled(const Rational& s) const {
    RatMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * s;
    return r;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

std::vector<Rational> RatMatrix::apply(const std::vector<Rational>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("vector length mismatch");
    std::vector<Rational> r(rows_, Rational(0));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
    return r;
}

bool RatMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

bool RatMatrix::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const Rational& x) { return x == 0; });
}

namespace {

// Row-scales to integers, then runs fraction-free Bareiss elimination with
// full pivot search down each column. Returns the echelon matrix and the
// pivot column of every eliminated row.
struct Echelon {
    std::vector<std::vector<Int>> m;
    std::vector<int> pivot_cols;
    int sign = 1;
};

Echelon bareiss_echelon(const RatMatrix& a) {
    const int rows = a.rows(), cols = a.cols();
    Echelon ech;
    ech.m.assign(rows, std::vector<Int>(cols));
    for (int i = 0; i < rows; ++i) {
        Int l = 1;
        for (int j = 0; j < cols; ++j) l = lcm(l, den(a.at(i, j)));
        for (int j = 0; j < cols; ++j) ech.m[i][j] = num(a.at(i, j)) * (l / den(a.at(i, j)));
    }
    Int prev = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (ech.m[i][c] != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r) { std::swap(ech.m[piv], ech.m[r]); ech.sign = -ech.sign; }
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j)
                ech.m[i][j] = (ech.m[r][c] * ech.m[i][j] - ech.m[i][c] * ech.m[r][j]) / prev;
            ech.m[i][c] = 0;
        }
        prev = ech.m[r][c];
        ech.pivot_cols.push_back(c);
        ++r;
    }
    return ech;
}

}  // namespace

int rank(const RatMatrix& m) {
    return static_cast<int>(bareiss_echelon(m).pivot_cols.size());
}

std::vector<Rational> primitive_vector(std::vector<Rational> v) {
    Int l = 1;
    for (const auto& x : v) l = lcm(l, den(x));
    Int g = 0;
    for (auto& x : v) {
        x *= l;
        g = gcd(g, num(x));
    }
    if (g == 0) return v;
    int lead_sign = 1;
    for (const auto& x : v)
        if (x != 0) { lead_sign = x > 0 ? 1 : -1; break; }
    for (auto& x : v) x = x / Rational(g * lead_sign);
    return v;
}

std::vector<std::vector<Rational>> kernel_basis(const RatMatrix& m) {
    const int cols = m.cols();
    Echelon ech = bareiss_echelon(m);
    const int r = static_cast<int>(ech.pivot_cols.size());
    std::vector<bool> is_pivot(cols, false);
    for (int c : ech.pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (int free_c = 0; free_c < cols; ++free_c) {
        if (is_pivot[free_c]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[free_c] = 1;
        // back-substitute through the echelon rows
        for (int i = r - 1; i >= 0; --i) {
            int pc = ech.pivot_cols[i];
            Rational s(0);
            for (int j = pc + 1; j < cols; ++j)
                if (ech.m[i][j] != 0 && v[j] != 0) s += Rational(ech.m[i][j]) * v[j];
            v[pc] = -s / Rational(ech.m[i][pc]);
        }
        basis.push_back(primitive_vector(std::move(v)));
    }
    return basis;
}

Rational det(const RatMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("det of non-square matrix");
    const int n = a.rows();
    if (n == 0) return Rational(1);
    Echelon ech;
    ech.m.assign(n, std::vector<Int>(n));
    Rational scale(1);
    for (int i = 0; i < n; ++i) {
        Int l = 1;
        for (int j = 0; j < n; ++j) l = lcm(l, den(a.at(i, j)));
        for (int j = 0; j < n; ++j) ech.m[i][j] = num(a.at(i, j)) * (l / den(a.at(i, j)));
        scale *= Rational(1, l);
    }
    Int prev = 1;
    int sign = 1;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i)
            if (ech.m[i][c] != 0) { piv = i; break; }
        if (piv < 0) return Rational(0);
        if (piv != c) { std::swap(ech.m[piv], ech.m[c]); sign = -sign; }
        for (int i = c + 1; i < n; ++i) {
            for (int j = c + 1; j < n; ++j)
                ech.m[i][j] = (ech.m[c][c] * ech.m[i][j] - ech.m[i][c] * ech.m[c][j]) / prev;
            ech.m[i][c] = 0;
        }
        prev = ech.m[c][c];
    }
    return Rational(ech.m[n - 1][n - 1]) * scale * sign;
}

RatMatrix adjugate(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("adjugate of non-square matrix");
    const int n = m.rows();
    if (n == 1) return RatMatrix::identity(1);
    RatMatrix adj(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            RatMatrix minor(n - 1, n - 1);
            for (int r = 0, rr = 0; r < n; ++r) {
                if (r == i) continue;
                for (int c = 0, cc = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor.at(rr, cc) = m.at(r, c);
                    ++cc;
                }
                ++rr;
            }
            Rational cof = det(minor);
            if ((i + j) % 2) cof = -cof;
            adj.at(j, i) = cof;  // transpose of the cofactor matrix
        }
    return adj;
}

RatMatrix inverse(const RatMatrix& m) {
    Rational d = det(m);
    if (d == 0) throw std::domain_error("inverse of singular matrix");
    return adjugate(m).scaled(1 / d);
}

std::vector<Rational> solve(const RatMatrix& m, const std::vector<Rational>& rhs) {
    return inverse(m).apply(rhs);
}

UniPoly char_poly_pencil(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
        throw std::invalid_argument("pencil matrices must be square of equal size");
    const int n = a.rows();
    const int deg = n;  // det(a + t b) has degree <= n
    // Lagrange interpolation through deg+1 exact sample points.
    std::vector<Rational> xs(deg + 1), ys(deg + 1);
    for (int k = 0; k <= deg; ++k) {
        xs[k] = k;
        ys[k] = det(a + b.scaled(Rational(k)));
    }
    UniPoly p;
    for (int k = 0; k <= deg; ++k) {
        UniPoly basis = UniPoly::constant(Rational(1));
        Rational denom(1);
        for (int j = 0; j <= deg; ++j) {
            if (j == k) continue;
            basis = basis * UniPoly({-xs[j], Rational(1)});
            denom *= xs[k] - xs[j];
        }
        p = p + basis.scaled(ys[k] / denom);
    }
    return p;
}

Rational resultant(const UniPoly& p, const UniPoly& q) {
    const int dp = p.degree(), dq = q.degree();
    if (dp < 0 || dq < 0) return Rational(0);
    if (dp == 0 && dq == 0) return Rational(1);
    if (dp == 0) { Rational r = p.coeff(0); Rational out(1); for (int i = 0; i < dq; ++i) out *= r; return out; }
    if (dq == 0) { Rational r = q.coeff(0); Rational out(1); for (int i = 0; i < dp; ++i) out *= r; return out; }
    const int n = dp + dq;
    RatMatrix syl(n, n);
    for (int i = 0; i < dq; ++i)
        for (int k = 0; k <= dp; ++k) syl.at(i, i + k) = p.coeff(dp - k);
    for (int i = 0; i < dp; ++i)
        for (int k = 0; k <= dq; ++k) syl.at(dq + i, i + k) = q.coeff(dq - k);
    return det(syl);
}

Rational discriminant(const UniPoly& p) {
    const int d = p.degree();
    if (d < 1) throw std::domain_error("discriminant requires degree >= 1");
    if (d == 1) return Rational(1);
    Rational res = resultant(p, p.derivative());
    Rational disc = res / p.leading();
    if ((static_cast<long long>(d) * (d - 1) / 2) % 2) disc = -disc;
    return disc;
}

PolyMatrix::PolyMatrix(int rows, int cols, int num_vars,
                       std::vector<int> row_twists, std::vector<int> col_twists)
    : rows_(rows), cols_(cols), num_vars_(num_vars),
      row_twists_(std::move(row_twists)), col_twists_(std::move(col_twists)) {
    if (static_cast<int>(row_twists_.size()) != rows || static_cast<int>(col_twists_.size()) != cols)
        throw std::invalid_argument("twist lists must match matrix shape");
    e_.reserve(static_cast<std::size_t>(rows) * cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            e_.emplace_back(num_vars, std::max(0, row_twists_[r] - col_twists_[c]));
}

void PolyMatrix::set(int r, int c, HomPoly p) {
    if (!p.is_zero() && p.degree() != row_twists_[r] - col_twists_[c])
        throw std::invalid_argument("entry degree violates twist bookkeeping");
    e_[static_cast<std::size_t>(r) * cols_ + c] = std::move(p);
}

RatMatrix PolyMatrix::evaluate(const std::vector<Rational>& point) const {
    RatMatrix m(rows_, cols_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) m.at(r, c) = at(r, c).evaluate(point);
    return m;
}

bool PolyMatrix::degrees_consistent() const {
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            if (!at(r, c).is_zero() && at(r, c).degree() != row_twists_[r] - col_twists_[c]) return false;
    return true;
}

}  // namespace logtorelli
