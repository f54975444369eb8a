#include "logtorelli/poly.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace logtorelli {

bool GradedLexBefore::operator()(const Exponents& a, const Exponents& b) const {
    int da = 0, db = 0;
    for (int e : a) da += e;
    for (int e : b) db += e;
    if (da != db) return da > db;
    return a > b;  // lexicographic, larger x0-exponent first
}

std::vector<Exponents> monomial_order(int num_vars, int degree) {
    if (num_vars == 3 && degree == 2) {
        return {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}};
    }
    std::vector<Exponents> out;
    Exponents cur(num_vars, 0);
    std::function<void(int, int)> rec = [&](int var, int rem) {
        if (var == num_vars - 1) {
            cur[var] = rem;
            out.push_back(cur);
            return;
        }
        for (int e = rem; e >= 0; --e) {
            cur[var] = e;
            rec(var + 1, rem - e);
        }
        cur[var] = 0;
    };
    rec(0, degree);
    return out;
}

HomPoly::HomPoly(int num_vars, int degree) : num_vars_(num_vars), degree_(degree) {
    if (num_vars < 1 || degree < 0) throw std::invalid_argument("bad HomPoly shape");
}

HomPoly HomPoly::monomial(int num_vars, Exponents e, const Rational& c) {
    int d = 0;
    for (int x : e) {
        if (x < 0) throw std::invalid_argument("negative exponent");
        d += x;
    }
    if (static_cast<int>(e.size()) != num_vars) throw std::invalid_argument("exponent length mismatch");
    HomPoly p(num_vars, d);
    p.add_term(e, c);
    return p;
}

HomPoly HomPoly::linear_form(const std::vector<Rational>& coeffs) {
    HomPoly p(static_cast<int>(coeffs.size()), 1);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        Exponents e(coeffs.size(), 0);
        e[i] = 1;
        p.add_term(e, coeffs[i]);
    }
    return p;
}

Rational HomPoly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void HomPoly::add_term(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    int d = 0;
    for (int x : e) d += x;
    if (d != degree_ || static_cast<int>(e.size()) != num_vars_)
        throw std::invalid_argument("term not homogeneous of the declared degree");
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

HomPoly HomPoly::operator+(const HomPoly& o) const {
    if (num_vars_ != o.num_vars_ || degree_ != o.degree_)
        throw std::invalid_argument("HomPoly shape mismatch in +");
    HomPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

HomPoly HomPoly::operator-(const HomPoly& o) const { return *this + o.scaled(Rational(-1)); }

HomPoly HomPoly::operator*(const HomPoly& o) const {
    if (num_vars_ != o.num_vars_) throw std::invalid_argument("HomPoly variable mismatch in *");
    HomPoly r(num_vars_, degree_ + o.degree_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            Exponents e(num_vars_);
            for (int i = 0; i < num_vars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

HomPoly HomPoly::scaled(const Rational& c) const {
    HomPoly r(num_vars_, degree_);
    if (c == 0) return r;
    for (const auto& [e, x] : terms_) r.terms_.emplace(e, x * c);
    return r;
}

HomPoly HomPoly::derivative(int var) const {
    if (degree_ == 0) return HomPoly(num_vars_, 0);
    HomPoly r(num_vars_, degree_ - 1);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponents d = e;
        d[var] -= 1;
        r.add_term(d, c * e[var]);
    }
    return r;
}

Rational HomPoly::evaluate(const std::vector<Rational>& point) const {
    Rational s(0);
    for (const auto& [e, c] : terms_) {
        Rational m = c;
        for (int i = 0; i < num_vars_; ++i)
            for (int k = 0; k < e[i]; ++k) m *= point[i];
        s += m;
    }
    return s;
}

std::complex<double> HomPoly::evaluate(const std::vector<std::complex<double>>& point) const {
    std::complex<double> s(0.0, 0.0);
    for (const auto& [e, c] : terms_) {
        std::complex<double> m(to_double(c), 0.0);
        for (int i = 0; i < num_vars_; ++i)
            for (int k = 0; k < e[i]; ++k) m *= point[i];
        s += m;
    }
    return s;
}

HomPoly HomPoly::substitute_linear(const std::vector<Rational>& m, int mat_dim) const {
    if (mat_dim != num_vars_ || static_cast<int>(m.size()) != mat_dim * mat_dim)
        throw std::invalid_argument("substitution matrix shape mismatch");
    std::vector<HomPoly> images;
    images.reserve(num_vars_);
    for (int i = 0; i < num_vars_; ++i) {
        std::vector<Rational> row(m.begin() + i * mat_dim, m.begin() + (i + 1) * mat_dim);
        images.push_back(HomPoly::linear_form(row));
    }
    HomPoly r(num_vars_, degree_);
    for (const auto& [e, c] : terms_) {
        HomPoly prod = HomPoly::monomial(num_vars_, Exponents(num_vars_, 0), c);
        for (int i = 0; i < num_vars_; ++i)
            for (int k = 0; k < e[i]; ++k) prod = prod * images[i];
        r = r + prod;
    }
    return r;
}

std::vector<Rational> HomPoly::coefficient_vector() const {
    auto order = monomial_order(num_vars_, degree_);
    std::vector<Rational> out;
    out.reserve(order.size());
    for (const auto& e : order) out.push_back(coeff(e));
    return out;
}

bool HomPoly::operator==(const HomPoly& o) const {
    return num_vars_ == o.num_vars_ && degree_ == o.degree_ && terms_ == o.terms_;
}

std::string HomPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << rational_to_string(c);
        for (int i = 0; i < num_vars_; ++i) {
            if (e[i] == 0) continue;
            os << "*x" << i;
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

void UniPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int UniPoly::degree() const { return static_cast<int>(c_.size()) - 1; }

Rational UniPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
    return c_[k];
}

Rational UniPoly::leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + o.scaled(Rational(-1)); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (c_.empty() || o.c_.empty()) return UniPoly();
    std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::scaled(const Rational& s) const {
    std::vector<Rational> r = c_;
    for (auto& x : r) x *= s;
    return UniPoly(std::move(r));
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<Rational> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<int>(i);
    return UniPoly(std::move(r));
}

Rational UniPoly::evaluate(const Rational& t) const {
    Rational s(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) s = s * t + *it;
    return s;
}

std::complex<double> UniPoly::evaluate(const std::complex<double>& t) const {
    std::complex<double> s(0.0, 0.0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) s = s * t + to_double(*it);
    return s;
}

bool UniPoly::operator==(const UniPoly& o) const { return c_ == o.c_; }

std::string UniPoly::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) os << " + ";
        os << rational_to_string(c_[i]);
        if (i >= 1) os << "*t";
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

}  // namespace logtorelli
