#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wzaccel/rational.hpp"

namespace wzaccel {

using Exponents = std::vector<int>;

// Graded lexicographic order, largest first, so terms().begin() is the
// leading term.
struct GrlexGreater {
  bool operator()(const Exponents& lhs, const Exponents& rhs) const;
};

/// Sparse multivariate polynomial with rational coefficients.
///
/// The variable list is kept in the global canonical order (n, k, a, m, ...)
/// and binary operations require both operands to share it exactly; use
/// embed() to move a polynomial into a larger variable set. No zero
/// coefficient is ever stored.
class Polynomial {
 public:
  using TermMap = std::map<Exponents, Rational, GrlexGreater>;

  Polynomial() = default;
  explicit Polynomial(std::vector<std::string> variables);

  static Polynomial constant(std::vector<std::string> variables,
                             const Rational& value);
  static Polynomial variable(std::vector<std::string> variables,
                             std::string_view name);
  static Polynomial monomial(std::vector<std::string> variables,
                             Exponents exponents, const Rational& coeff);

  const std::vector<std::string>& variables() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  int total_degree() const;
  int degree(std::size_t var) const;
  bool involves(std::size_t var) const { return degree(var) > 0; }

  std::optional<std::size_t> find_variable(std::string_view name) const;
  std::size_t index_of(std::string_view name) const;

  const Exponents& leading_exponents() const;
  const Rational& leading_coefficient() const;

  void add_term(const Exponents& exponents, const Rational& coeff);

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& scalar);
  Polynomial operator-() const;
  Polynomial pow(unsigned exponent) const;

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) {
    return lhs += rhs;
  }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) {
    return lhs -= rhs;
  }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator*(Polynomial lhs, const Rational& rhs) {
    return lhs *= rhs;
  }
  friend Polynomial operator*(const Rational& lhs, Polynomial rhs) {
    return rhs *= lhs;
  }
  friend bool operator==(const Polynomial& lhs, const Polynomial& rhs) {
    return lhs.vars_ == rhs.vars_ && lhs.terms_ == rhs.terms_;
  }

  /// Value at a point given in variable order.
  Rational evaluate(std::span<const Rational> point) const;

  Polynomial partial_evaluate(std::size_t var, const Rational& value) const;
  Polynomial substitute(std::size_t var, const Polynomial& value) const;
  Polynomial shift(std::size_t var, const Rational& by) const;

  /// Replace every variable i by images[i], a polynomial over new_variables.
  Polynomial compose(std::vector<std::string> new_variables,
                     std::span<const Polynomial> images) const;

  /// Same polynomial over a superset of its variables.
  Polynomial embed(const std::vector<std::string>& variables) const;

  /// Coefficients with respect to one variable; entry i multiplies var^i.
  std::vector<Polynomial> coefficients_in(std::size_t var) const;
  Polynomial coefficient_in(std::size_t var, int degree) const;

  /// Positive rational c such that *this / c has coprime integer coefficients.
  Rational content() const;
  /// Integer primitive part with positive leading coefficient.
  Polynomial primitive_part() const;

  std::string to_string() const;

 private:
  void check_compatible(const Polynomial& other) const;

  std::vector<std::string> vars_;
  TermMap terms_;
};

std::vector<std::string> canonical_variables(std::vector<std::string> names);
std::vector<std::string> merge_variables(const std::vector<std::string>& lhs,
                                         const std::vector<std::string>& rhs);

std::optional<Polynomial> divide_exact(const Polynomial& dividend,
                                       const Polynomial& divisor);

/// Pseudo-remainder of a by b with respect to var.
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b,
                            std::size_t var);

/// Greatest common divisor over Q, normalized to an integer primitive
/// polynomial with positive leading coefficient. gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// gcd of the coefficients of p viewed as a polynomial in var.
Polynomial content_in(const Polynomial& p, std::size_t var);

/// p divided by its content in var (and normalized like gcd()).
Polynomial primitive_part_in(const Polynomial& p, std::size_t var);

}  // namespace wzaccel
