#include "wzaccel/ratfunc.hpp"

#include <stdexcept>

#include "wzaccel/errors.hpp"

namespace wzaccel {

namespace {

Polynomial quotient_of(const Polynomial& a, const Polynomial& b) {
  auto q = divide_exact(a, b);
  if (!q) throw std::logic_error("gcd does not divide operand");
  return *std::move(q);
}

}  // namespace

RationalFunction::RationalFunction()
    : num_(std::vector<std::string>{}),
      den_(Polynomial::constant({}, 1)) {}

RationalFunction::RationalFunction(const Polynomial& numerator)
    : num_(numerator), den_(Polynomial::constant(numerator.variables(), 1)) {}

RationalFunction::RationalFunction(const Polynomial& numerator,
                                   const Polynomial& denominator)
    : num_(numerator), den_(denominator) {
  if (num_.variables() != den_.variables()) {
    throw VariableMismatch("numerator and denominator variables differ");
  }
  if (den_.is_zero()) throw ZeroDenominator();
  normalize();
}

RationalFunction RationalFunction::constant(std::vector<std::string> variables,
                                            const Rational& value) {
  return RationalFunction(Polynomial::constant(std::move(variables), value));
}

RationalFunction RationalFunction::from_coprime(const Polynomial& numerator,
                                                const Polynomial& denominator) {
  if (numerator.variables() != denominator.variables()) {
    throw VariableMismatch("numerator and denominator variables differ");
  }
  if (denominator.is_zero()) throw ZeroDenominator();
  RationalFunction out;
  out.num_ = numerator;
  out.den_ = denominator;
  if (out.num_.is_zero()) {
    out.den_ = Polynomial::constant(out.num_.variables(), 1);
    return out;
  }
  out.normalize_scalars();
  return out;
}

Rational RationalFunction::constant_value() const {
  if (!is_constant()) throw std::logic_error("rational function is not constant");
  return num_.constant_term() / den_.constant_term();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial::constant(num_.variables(), 1);
    return;
  }
  if (!den_.is_constant()) {
    const Polynomial g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = quotient_of(num_, g);
      den_ = quotient_of(den_, g);
    }
  }
  normalize_scalars();
}

void RationalFunction::normalize_scalars() {
  // Move the denominator's content and sign into the numerator.
  Rational c = den_.content();
  if (den_.leading_coefficient() < 0) c = -c;
  if (c != 1) {
    const Rational inv = Rational(1) / c;
    den_ *= inv;
    num_ *= inv;
  }
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& rhs) {
  return *this += -rhs;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& rhs) {
  if (variables() != rhs.variables()) {
    throw VariableMismatch("rational function operands use different variables");
  }
  if (is_zero() || rhs.is_zero()) {
    *this = constant(variables(), 0);
    return *this;
  }
  // Cross-cancel first so the products stay small.
  const Polynomial g1 = gcd(num_, rhs.den_);
  const Polynomial g2 = gcd(rhs.num_, den_);
  num_ = quotient_of(num_, g1) * quotient_of(rhs.num_, g2);
  den_ = quotient_of(den_, g2) * quotient_of(rhs.den_, g1);
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& rhs) {
  return *this *= rhs.inverse();
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction out = *this;
  out.num_ = -out.num_;
  return out;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw ZeroDenominator();
  return RationalFunction(den_, num_);
}

std::optional<Rational> RationalFunction::evaluate(
    std::span<const Rational> point) const {
  const Rational d = den_.evaluate(point);
  if (d == 0) return std::nullopt;
  return num_.evaluate(point) / d;
}

RationalFunction RationalFunction::shift(std::size_t var,
                                         const Rational& by) const {
  // Shifting is a ring automorphism, so coprimality is preserved.
  return from_coprime(num_.shift(var, by), den_.shift(var, by));
}

RationalFunction RationalFunction::compose(
    std::vector<std::string> new_variables,
    std::span<const Polynomial> images) const {
  Polynomial n = num_.compose(new_variables, images);
  Polynomial d = den_.compose(std::move(new_variables), images);
  return RationalFunction(n, d);
}

RationalFunction RationalFunction::embed(
    const std::vector<std::string>& variables) const {
  RationalFunction out;
  out.num_ = num_.embed(variables);
  out.den_ = den_.embed(variables);
  return out;
}

std::string RationalFunction::to_string() const {
  if (den_.is_constant()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RationalFunction ratfunc_normalize(const Polynomial& num, const Polynomial& den) {
  return RationalFunction(num, den);
}

bool ratfunc_equal(const RationalFunction& a, const RationalFunction& b) {
  if (a.variables() != b.variables()) {
    throw VariableMismatch("cannot compare rational functions over different variables");
  }
  return a.numerator() * b.denominator() == b.numerator() * a.denominator();
}

}  // namespace wzaccel
