#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wzaccel/polynomial.hpp"

namespace wzaccel {

/// Quotient of two polynomials in canonical form: numerator and denominator
/// are coprime, the denominator is an integer primitive polynomial with
/// positive leading coefficient, and zero is 0/1. Equality of canonical
/// forms is equality of rational functions.
class RationalFunction {
 public:
  RationalFunction();
  explicit RationalFunction(const Polynomial& numerator);
  RationalFunction(const Polynomial& numerator, const Polynomial& denominator);

  static RationalFunction constant(std::vector<std::string> variables,
                                   const Rational& value);
  /// Skips the gcd; the caller guarantees gcd(numerator, denominator) = 1.
  static RationalFunction from_coprime(const Polynomial& numerator,
                                       const Polynomial& denominator);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  const std::vector<std::string>& variables() const { return num_.variables(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  /// Value of a constant rational function.
  Rational constant_value() const;

  RationalFunction& operator+=(const RationalFunction& rhs);
  RationalFunction& operator-=(const RationalFunction& rhs);
  RationalFunction& operator*=(const RationalFunction& rhs);
  RationalFunction& operator/=(const RationalFunction& rhs);
  RationalFunction operator-() const;
  RationalFunction inverse() const;

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) {
    return a += b;
  }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) {
    return a -= b;
  }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) {
    return a *= b;
  }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) {
    return a /= b;
  }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// nullopt at a pole.
  std::optional<Rational> evaluate(std::span<const Rational> point) const;

  RationalFunction shift(std::size_t var, const Rational& by) const;
  RationalFunction compose(std::vector<std::string> new_variables,
                           std::span<const Polynomial> images) const;
  RationalFunction embed(const std::vector<std::string>& variables) const;

  std::string to_string() const;

 private:
  void normalize();
  void normalize_scalars();

  Polynomial num_;
  Polynomial den_;
};

/// Canonical representative of num/den. Throws ZeroDenominator.
RationalFunction ratfunc_normalize(const Polynomial& num, const Polynomial& den);

/// True iff a - b is zero. Throws VariableMismatch on different variables.
bool ratfunc_equal(const RationalFunction& a, const RationalFunction& b);

}  // namespace wzaccel
