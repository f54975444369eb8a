#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace logtorelli {

// Exact scalars. The rational adaptor keeps the denominator positive and the
// fraction in lowest terms, which is exactly the canonical form we need.
// Expression templates are disabled: every operator must yield a value, so
// that `auto` and structured bindings never capture lazy references.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

inline Int num(const Rational& q) { return numerator(q); }
inline Int den(const Rational& q) { return denominator(q); }

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

// Accepts "p", "-p/q", with optional whitespace. Throws on q = 0 or garbage.
Rational parse_rational(std::string_view text);

// Canonical "p" or "p/q" with q > 1.
std::string rational_to_string(const Rational& q);

}  // namespace logtorelli
