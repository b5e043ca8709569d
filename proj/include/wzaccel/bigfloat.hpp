#pragma once

#include <mpfr.h>

#include <string>

#include "wzaccel/rational.hpp"

namespace wzaccel {

/// Owning wrapper around an mpfr_t. All arithmetic rounds to nearest.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t bits);
  BigFloat(const Rational& value, mpfr_prec_t bits);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }

  BigFloat& operator+=(const BigFloat& rhs);
  BigFloat& operator*=(const Integer& rhs);
  BigFloat& operator/=(const Integer& rhs);
  BigFloat& operator*=(const Rational& rhs);

  BigFloat abs() const;
  /// log10|x|; -inf for zero.
  double log10_abs() const;

  /// `digits` significant decimal digits, rounded to nearest: d.ddd when
  /// 0.1 <= |x| < 10, d.ddde+X otherwise.
  std::string to_decimal(long digits) const;

 private:
  mpfr_t value_;
};

/// Bits needed for `digits` decimal digits.
mpfr_prec_t bits_for_digits(long digits);

}  // namespace wzaccel
