#include "logtorelli/invariants.hpp"

#include <algorithm>
#include <stdexcept>

namespace logtorelli {

namespace {

// multiply the truncated series by (1 + a t)
void series_mul_linear(std::vector<Int>& s, const Int& a) {
    for (std::size_t i = s.size(); i-- > 1;) s[i] += a * s[i - 1];
}

// divide the truncated series by (1 + a t)
void series_div_linear(std::vector<Int>& s, const Int& a) {
    for (std::size_t i = 1; i < s.size(); ++i) s[i] -= a * s[i - 1];
}

}  // namespace

ChernData chern_from_resolution(const GradedResolution& res, int n) {
    ChernData cd;
    cd.n = n;
    cd.rank = res.rank();
    if (cd.rank <= 0) throw std::domain_error("resolution has non-positive rank");
    std::vector<Int> s(n + 1, Int(0));
    s[0] = 1;
    for (int b : res.target_twists) series_mul_linear(s, Int(b));
    for (int a : res.source_twists) series_div_linear(s, Int(a));
    if (n < 1) throw std::invalid_argument("chern data needs ambient dimension >= 1");
    cd.chern_poly = std::move(s);
    cd.slope = Rational(cd.chern_poly[1], cd.rank);
    return cd;
}

StabilityVerdict bohnhorst_spindler(const GradedResolution& res, int n) {
    const int k = static_cast<int>(res.source_twists.size());
    if (static_cast<int>(res.target_twists.size()) != n + k)
        throw std::invalid_argument("resolution shape must be k sources and n+k targets");
    std::vector<int> b = res.target_twists;
    std::sort(b.rbegin(), b.rend());
    Rational sum(0);
    for (int x : b) sum += x;
    for (int a : res.source_twists) sum -= a;
    StabilityVerdict v;
    v.mu = sum / n;
    v.b1 = b[0];
    if (n >= 1 && b[0] == b[n - 1]) {
        v.stable = v.semistable = true;
        v.reason = "b1 = ... = bn forces stability";
        return v;
    }
    v.stable = v.b1 < v.mu;
    v.semistable = v.b1 <= v.mu;
    if (v.stable) v.reason = "b1 < mu";
    else if (v.semistable) v.reason = "b1 = mu";
    else v.reason = "b1 > mu";
    return v;
}

Int moduli_dimension(const Int& c1, const Int& c2) {
    return -c1 * c1 + 4 * c2 - 3;
}

}  // namespace logtorelli
