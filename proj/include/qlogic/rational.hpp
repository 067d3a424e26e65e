#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qlogic {

/// Arbitrary-precision rational, always kept in canonical (reduced, den > 0) form.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses `int` or `int/posint` (optional leading sign). Throws ParseError.
Rational parse_rational(std::string_view text);

/// Canonical text: "3", "-1/2".
std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

} // namespace qlogic
