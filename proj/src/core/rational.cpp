#include "hcrep/rational.hpp"

#include <cctype>
#include <climits>

#include "hcrep/error.hpp"

namespace hcrep {

namespace {

std::string normalize_minus(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        // U+2212 MINUS SIGN is E2 88 92 in UTF-8.
        if (i + 2 < text.size() &&static_cast<unsigned char>(text[i]) == 0xE2 &&
            static_cast<unsigned char>(text[i + 1]) == 0x88 &&
            static_cast<unsigned char>(text[i + 2]) == 0x92) {
            out.push_back('-');
            i += 2;
            continue;
        }
        if (!std::isspace(static_cast<unsigned char>(text[i]))) out.push_back(text[i]);
    }
    return out;
}

bool valid_integer_literal(std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string s = normalize_minus(text);
    auto slash = s.find('/');
    std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_integer_literal(num, true) || !valid_integer_literal(den, false))
        throw InvalidInput("not a rational number: '" + std::string(text) + "'");
    if (num[0] == '+') num.erase(0, 1);
    BigInt n(num), d(den);
    if (d == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::vector<Rational> parse_rational_list(std::string_view text) {
    std::vector<Rational> out;
    std::size_t start = 0;
    while (true) {
        auto comma = text.find(',', start);
        out.push_back(parse_rational(text.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::string to_string(const Rational& r) { return r.get_str(); }
std::string to_string(const BigInt& n) { return n.get_str(); }

long to_long(const Rational& r) {
    if (!is_integer(r) || !r.get_num().fits_slong_p())
        throw InvalidInput("value " + r.get_str() + " is not a machine integer");
    return r.get_num().get_si();
}

}  // namespace hcrep
