#include "logtorelli/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace logtorelli {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

Int parse_int(std::string_view s) {
    s = trim(s);
    if (s.empty()) throw std::invalid_argument("empty integer in rational literal");
    std::size_t i = 0;
    if (s[0] == '+' || s[0] == '-') i = 1;
    if (i == s.size()) throw std::invalid_argument("sign without digits in rational literal");
    for (std::size_t j = i; j < s.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(s[j])))
            throw std::invalid_argument("invalid digit in rational literal: '" + std::string(s) + "'");
    return Int(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view text) {
    text = trim(text);
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    Int n = parse_int(text.substr(0, slash));
    Int d = parse_int(text.substr(slash + 1));
    if (d == 0) throw std::invalid_argument("zero denominator in rational literal: '" + std::string(text) + "'");
    if (d < 0) { n = -n; d = -d; }
    return Rational(n, d);
}

std::string rational_to_string(const Rational& q) {
    if (den(q) == 1) return num(q).str();
    return num(q).str() + "/" + den(q).str();
}

}  // namespace logtorelli
