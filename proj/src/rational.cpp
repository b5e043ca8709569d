#include "wzaccel/rational.hpp"

#include <cctype>

#include "wzaccel/errors.hpp"

namespace wzaccel {

namespace {

bool is_canonical_integer(std::string_view text, bool allow_sign) {
  if (text.empty()) return false;
  std::size_t pos = 0;
  if (text[0] == '-') {
    if (!allow_sign) return false;
    pos = 1;
  }
  if (pos == text.size()) return false;
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  // No leading zeros, and no "-0".
  if (text[pos] == '0' && text.size() - pos > 1) return false;
  if (pos == 1 && text.substr(1) == "0") return false;
  return true;
}

}  // namespace

Rational parse_canonical_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  if (!is_canonical_integer(num, true)) {
    throw ParseError("malformed rational \"" + std::string(text) + "\"");
  }
  Integer p(std::string(num), 10);
  if (slash == std::string_view::npos) return Rational(p);

  const std::string_view den = text.substr(slash + 1);
  if (!is_canonical_integer(den, false)) {
    throw ParseError("malformed rational \"" + std::string(text) + "\"");
  }
  Integer q(std::string(den), 10);
  Integer g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  if (q <= 1 || g != 1) {
    throw ParseError("rational \"" + std::string(text) +
                     "\" is not in canonical form");
  }
  return Rational(p, q);
}

std::string to_canonical_string(const Rational& raw) {
  Rational value = raw;
  value.canonicalize();
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational rational_pow(const Rational& base, long exponent) {
  Rational result = 1;
  Rational b = base;
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent)
                                 : static_cast<unsigned long>(exponent);
  if (exponent < 0) {
    if (b == 0) throw ZeroDenominator();
    b = 1 / b;
  }
  mpz_pow_ui(result.get_num_mpz_t(), b.get_num_mpz_t(), e);
  mpz_pow_ui(result.get_den_mpz_t(), b.get_den_mpz_t(), e);
  result.canonicalize();
  return result;
}

int variable_rank(std::string_view name) {
  if (name == "n") return 0;
  if (name == "k") return 1;
  if (name == "a") return 2;
  if (name == "m") return 3;
  return 4;
}

bool VariableLess::operator()(const std::string& lhs,
                              const std::string& rhs) const {
  const int rl = variable_rank(lhs);
  const int rr = variable_rank(rhs);
  if (rl != rr) return rl < rr;
  return lhs < rhs;
}

}  // namespace wzaccel
