#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace hcrep {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Parses "p", "p/q" or "-p/q" (ASCII or U+2212 minus). Throws InvalidInput.
Rational parse_rational(std::string_view text);

/// Parses a comma-separated list of rationals such as "3,-1/2".
std::vector<Rational> parse_rational_list(std::string_view text);

/// Canonical "p/q" (or "p" when integral) rendering.
std::string to_string(const Rational& r);
std::string to_string(const BigInt& n);

/// n/d in canonical form (mpq_class(n, d) alone does not canonicalize).
inline Rational make_rational(long n, long d) {
    Rational r(n, d);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// Returns the numerator as a long; caller must check is_integer and range.
long to_long(const Rational& r);

}  // namespace hcrep
