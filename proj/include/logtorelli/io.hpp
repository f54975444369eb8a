#pragma once

#include "logtorelli/arrangement.hpp"
#include "logtorelli/numeric.hpp"
#include "logtorelli/resolution.hpp"

#include <json.hpp>

#include <string>

namespace logtorelli {

using Json = nlohmann::ordered_json;

// Arrangement file schema:
// {
//   "schema_version": "1",
//   "n": 2,
//   "members": [
//     { "degree": 2,
//       "coefficients": { "2,0,0": "1", "1,1,0": "-3/2", ... },
//       "label": "C1" }
//   ]
// }
// Keys of "coefficients" are exponent tuples "e0,e1,...,en" summing to the
// member degree; values are rational literals "p" or "p/q".
Arrangement parse_arrangement(const Json& j);
Arrangement load_arrangement(const std::string& path);

// Canonical serialization: coefficients emitted in the fixed monomial
// order, rationals in lowest terms. parse(serialize(a)) == a.
Json serialize_arrangement(const Arrangement& arr);

Json json_rational(const Rational& q);
Json json_rational_vector(const std::vector<Rational>& v);
Json json_complex(const ComplexVal& z);
Json json_complex_vector(const ComplexVec& v);
Json json_matrix(const RatMatrix& m);
Json json_resolution(const GradedResolution& res);
Json json_nc_report(const NormalCrossingsReport& rep);

}  // namespace logtorelli
