#include "logtorelli/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace logtorelli {

namespace {

Exponents parse_exponents(const std::string& key, int expected_vars) {
    Exponents e;
    std::stringstream ss(key);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(part, &used);
            if (used != part.size() || v < 0) throw std::invalid_argument("");
            e.push_back(v);
        } catch (...) {
            throw std::invalid_argument("bad exponent key '" + key + "'");
        }
    }
    if (static_cast<int>(e.size()) != expected_vars)
        throw std::invalid_argument("exponent key '" + key + "' needs " + std::to_string(expected_vars) +
                                    " entries");
    return e;
}

std::string exponents_key(const Exponents& e) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(e[i]);
    }
    return s;
}

}  // namespace

Arrangement parse_arrangement(const Json& j) {
    if (!j.is_object()) throw std::invalid_argument("arrangement file must be a JSON object");
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw std::invalid_argument("arrangement file needs an integer field 'n'");
    const int n = j["n"].get<int>();
    if (!j.contains("members") || !j["members"].is_array() || j["members"].empty())
        throw std::invalid_argument("arrangement file needs a non-empty 'members' array");

    std::vector<Member> members;
    int idx = 0;
    for (const auto& jm : j["members"]) {
        std::string where = "members[" + std::to_string(idx++) + "]";
        if (!jm.is_object() || !jm.contains("degree") || !jm.contains("coefficients"))
            throw std::invalid_argument(where + " needs 'degree' and 'coefficients'");
        const int d = jm["degree"].get<int>();
        if (d < 1) throw std::invalid_argument(where + ": degree must be >= 1");
        HomPoly f(n + 1, d);
        for (const auto& [key, val] : jm["coefficients"].items()) {
            Exponents e = parse_exponents(key, n + 1);
            Rational c;
            try {
                c = parse_rational(val.get<std::string>());
            } catch (const std::exception& ex) {
                throw std::invalid_argument(where + ".coefficients['" + key + "']: " + ex.what());
            }
            int sum = 0;
            for (int x : e) sum += x;
            if (sum != d)
                throw std::invalid_argument(where + ".coefficients['" + key + "']: exponents sum to " +
                                            std::to_string(sum) + ", degree is " + std::to_string(d));
            f.add_term(e, c);
        }
        if (f.is_zero()) throw std::invalid_argument(where + ": zero polynomial");
        std::string label = jm.contains("label") ? jm["label"].get<std::string>() : std::string();
        members.push_back({d, std::move(f), std::move(label)});
    }
    return Arrangement(n, std::move(members));
}

Arrangement load_arrangement(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const std::exception& ex) {
        throw std::invalid_argument("JSON parse error in '" + path + "': " + ex.what());
    }
    return parse_arrangement(j);
}

Json serialize_arrangement(const Arrangement& arr) {
    Json j;
    j["schema_version"] = "1";
    j["n"] = arr.ambient_dim();
    j["members"] = Json::array();
    for (const auto& m : arr.members()) {
        Json jm;
        jm["degree"] = m.degree;
        Json coeffs = Json::object();
        for (const auto& e : monomial_order(arr.ambient_dim() + 1, m.degree)) {
            Rational c = m.f.coeff(e);
            if (c != 0) coeffs[exponents_key(e)] = rational_to_string(c);
        }
        jm["coefficients"] = std::move(coeffs);
        if (!m.label.empty()) jm["label"] = m.label;
        j["members"].push_back(std::move(jm));
    }
    return j;
}

Json json_rational(const Rational& q) { return rational_to_string(q); }

Json json_rational_vector(const std::vector<Rational>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(rational_to_string(x));
    return a;
}

Json json_complex(const ComplexVal& z) { return Json::array({z.real(), z.imag()}); }

Json json_complex_vector(const ComplexVec& v) {
    Json a = Json::array();
    for (const auto& z : v) a.push_back(json_complex(z));
    return a;
}

Json json_matrix(const RatMatrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(rational_to_string(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json json_resolution(const GradedResolution& res) {
    Json j;
    j["source_twists"] = res.source_twists;
    j["target_twists"] = res.target_twists;
    Json rows = Json::array();
    for (int r = 0; r < res.matrix.rows(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < res.matrix.cols(); ++c) row.push_back(res.matrix.at(r, c).to_string());
        rows.push_back(std::move(row));
    }
    j["matrix"] = std::move(rows);
    return j;
}

Json json_nc_report(const NormalCrossingsReport& rep) {
    Json j;
    switch (rep.status) {
        case NCStatus::Holds: j["status"] = "holds"; break;
        case NCStatus::Fails: j["status"] = "fails"; break;
        default: j["status"] = "unknown"; break;
    }
    j["method"] = rep.method;
    if (!rep.failing_subsets.empty()) j["failing_subsets"] = rep.failing_subsets;
    if (!rep.ambiguous_points.empty()) {
        Json pts = Json::array();
        for (const auto& p : rep.ambiguous_points) pts.push_back(json_complex_vector(p.coords));
        j["ambiguous_points"] = std::move(pts);
        j["ambiguous_points_numeric"] = true;
    }
    return j;
}

}  // namespace logtorelli
