#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace wzaccel {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parse a rational in canonical form: "p" for integers, "p/q" with q > 1
/// and gcd(p, q) = 1 otherwise. Anything else (for example "2/4", "3/1",
/// "+1", "1/-2") throws ParseError.
Rational parse_canonical_rational(std::string_view text);

/// Canonical text form, the inverse of parse_canonical_rational.
std::string to_canonical_string(const Rational& value);

Rational rational_pow(const Rational& base, long exponent);

// Global variable order: n, k, a, m, then anything else alphabetically.
int variable_rank(std::string_view name);

struct VariableLess {
  bool operator()(const std::string& lhs, const std::string& rhs) const;
};

}  // namespace wzaccel
