#include "wzaccel/bigfloat.hpp"

#include <cmath>
#include <limits>
#include <utility>

namespace wzaccel {

BigFloat::BigFloat(mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(const Rational& value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  // Leave `other` as a valid zero of minimal precision.
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

BigFloat& BigFloat::operator+=(const BigFloat& rhs) {
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(const Integer& rhs) {
  mpfr_mul_z(value_, value_, rhs.get_mpz_t(), MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(const Integer& rhs) {
  mpfr_div_z(value_, value_, rhs.get_mpz_t(), MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(const Rational& rhs) {
  mpfr_mul_q(value_, value_, rhs.get_mpq_t(), MPFR_RNDN);
  return *this;
}

BigFloat BigFloat::abs() const {
  BigFloat out(precision());
  mpfr_abs(out.value_, value_, MPFR_RNDN);
  return out;
}

double BigFloat::log10_abs() const {
  if (is_zero()) return -std::numeric_limits<double>::infinity();
  long exp = 0;
  const double mant = mpfr_get_d_2exp(&exp, value_, MPFR_RNDN);
  return std::log10(std::fabs(mant)) + static_cast<double>(exp) * std::log10(2.0);
}

std::string BigFloat::to_decimal(long digits) const {
  if (is_zero()) {
    return digits > 1 ? "0." + std::string(digits - 1, '0') : "0";
  }
  mpfr_exp_t exp = 0;
  char* raw = mpfr_get_str(nullptr, &exp, 10, static_cast<std::size_t>(digits), value_,
                           MPFR_RNDN);
  std::string mant(raw);
  mpfr_free_str(raw);
  std::string sign;
  if (mant.front() == '-') {
    sign = "-";
    mant.erase(0, 1);
  }
  // value = 0.mant * 10^exp
  if (exp == 1) {
    return sign + mant.substr(0, 1) + (mant.size() > 1 ? "." + mant.substr(1) : "");
  }
  if (exp == 0) return sign + "0." + mant;
  std::string out = sign + mant.substr(0, 1);
  if (mant.size() > 1) out += "." + mant.substr(1);
  return out + "e" + std::to_string(static_cast<long>(exp) - 1);
}

mpfr_prec_t bits_for_digits(long digits) {
  return static_cast<mpfr_prec_t>(std::ceil(static_cast<double>(digits) * 3.3219280948873623)) + 8;
}

}  // namespace wzaccel
