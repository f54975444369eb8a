#include "logtorelli/numeric.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <stdexcept>

namespace logtorelli {

Tolerances& tolerances() {
    static Tolerances t;
    return t;
}

bool is_finite(const ComplexVal& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

namespace {

Eigen::MatrixXcd to_eigen(const ComplexMatrix& m) {
    Eigen::MatrixXcd e(m.size(), m.empty() ? 0 : m[0].size());
    for (Eigen::Index i = 0; i < e.rows(); ++i)
        for (Eigen::Index j = 0; j < e.cols(); ++j) e(i, j) = m[i][j];
    return e;
}

ComplexMatrix from_eigen(const Eigen::MatrixXcd& e) {
    ComplexMatrix m(e.rows(), ComplexVec(e.cols()));
    for (Eigen::Index i = 0; i < e.rows(); ++i)
        for (Eigen::Index j = 0; j < e.cols(); ++j) m[i][j] = e(i, j);
    return m;
}

}  // namespace

ComplexVec complex_roots(const UniPoly& p) {
    const int d = p.degree();
    if (d < 1) throw std::domain_error("complex_roots requires degree >= 1");
    std::vector<double> c(d + 1);
    for (int i = 0; i <= d; ++i) c[i] = to_double(p.coeff(i) / p.leading());
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(d, d);
    for (int i = 1; i < d; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < d; ++i) comp(i, d - 1) = -c[i];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(comp, false);
    if (solver.info() != Eigen::Success) throw std::runtime_error("root finding failed to converge");

    UniPoly dp = p.derivative();
    ComplexVec roots(d);
    for (int i = 0; i < d; ++i) {
        ComplexVal z = solver.eigenvalues()(i);
        double best = std::abs(p.evaluate(z));
        for (int it = 0; it < 8; ++it) {  // Newton polish, accepted only when it helps
            ComplexVal g = dp.evaluate(z);
            if (std::abs(g) < 1e-300) break;
            ComplexVal trial = z - p.evaluate(z) / g;
            if (!is_finite(trial)) break;
            double val = std::abs(p.evaluate(trial));
            if (val >= best) break;
            z = trial;
            best = val;
        }
        roots[i] = z;
    }

    for (const ComplexVal& z : roots) {
        if (!is_finite(z)) throw std::runtime_error("root finding produced a non-finite root");
        // coefficient magnitude times max(1,|z|)^d keeps the bound meaningful
        // when trailing coefficients vanish (roots at or near zero)
        double cmax = 0.0;
        for (int i = 0; i <= d; ++i) cmax = std::max(cmax, std::abs(to_double(p.coeff(i))));
        double scale = cmax;
        for (int i = 0; i < d; ++i) scale *= std::max(1.0, std::abs(z));
        if (std::abs(p.evaluate(z)) > tolerances().root_eval * scale)
            throw std::runtime_error("root residual exceeds tolerance; refusing to report unreliable roots");
    }

    std::sort(roots.begin(), roots.end(), [](const ComplexVal& a, const ComplexVal& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return roots;
}

ComplexMatrix to_complex(const RatMatrix& m) {
    ComplexMatrix r(m.rows(), ComplexVec(m.cols()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r[i][j] = ComplexVal(to_double(m.at(i, j)), 0.0);
    return r;
}

ComplexMatrix cmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    return from_eigen(to_eigen(a) * to_eigen(b));
}

ComplexMatrix ctranspose(const ComplexMatrix& a) {
    return from_eigen(to_eigen(a).transpose());
}

ComplexMatrix cinverse(const ComplexMatrix& a) {
    Eigen::MatrixXcd e = to_eigen(a);
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(e);
    if (!lu.isInvertible()) throw std::runtime_error("numeric matrix not invertible");
    return from_eigen(lu.inverse());
}

double cnorm_inf(const ComplexMatrix& a) {
    double m = 0.0;
    for (const auto& row : a)
        for (const auto& z : row) m = std::max(m, std::abs(z));
    return m;
}

std::pair<ComplexVec, ComplexMatrix> complex_eig(const ComplexMatrix& m) {
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(to_eigen(m), true);
    if (solver.info() != Eigen::Success) throw std::runtime_error("eigen-decomposition failed");
    ComplexVec vals(solver.eigenvalues().data(), solver.eigenvalues().data() + solver.eigenvalues().size());
    return {vals, from_eigen(solver.eigenvectors())};
}

ComplexVal principal_sqrt(const ComplexVal& z) {
    ComplexVal s = std::sqrt(z);
    if (s.real() < 0.0 || (s.real() == 0.0 && s.imag() < 0.0)) s = -s;
    return s;
}

double projective_distance(const ComplexVec& u, const ComplexVec& v) {
    if (u.size() != v.size()) throw std::invalid_argument("projective_distance length mismatch");
    double nu = 0.0, nv = 0.0;
    ComplexVal dot(0.0, 0.0);
    for (std::size_t i = 0; i < u.size(); ++i) {
        nu += std::norm(u[i]);
        nv += std::norm(v[i]);
        dot += std::conj(v[i]) * u[i];
    }
    if (nu == 0.0 || nv == 0.0) throw std::invalid_argument("projective_distance of zero vector");
    // sine of the Hermitian angle via the component of u orthogonal to v;
    // the 1 - cos^2 route would lose half the significant digits
    double rej = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) rej += std::norm(u[i] - (dot / nv) * v[i]);
    return std::sqrt(rej / nu);
}

}  // namespace logtorelli
