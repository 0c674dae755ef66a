#include "hc/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace hc {

std::string to_string(const Rational& x) {
    return x.str();
}

namespace {

bool is_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

bool is_unsigned_literal(std::string_view s) {
    return !s.empty() && s[0] != '-' && s[0] != '+' && is_integer_literal(s);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    if (!is_integer_literal(num)) throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
    std::string n(num);
    if (n[0] == '+') n.erase(0, 1);
    if (slash == std::string_view::npos) return Rational(boost::multiprecision::mpz_int(n));
    const std::string_view den = text.substr(slash + 1);
    if (!is_unsigned_literal(den)) throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
    boost::multiprecision::mpz_int d{std::string(den)};
    if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    return Rational(boost::multiprecision::mpz_int(n)) / Rational(d);
}

}  // namespace hc
