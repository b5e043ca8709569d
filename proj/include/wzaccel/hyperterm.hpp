#pragma once

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wzaccel/ratfunc.hpp"

namespace wzaccel {

/// Integer-linear form sum(c_v * v) + constant, stored sparsely.
struct LinearForm {
  std::map<std::string, long, VariableLess> coeffs;
  long constant = 0;

  static LinearForm variable(const std::string& name, long coeff = 1,
                             long constant = 0);

  long coefficient(const std::string& name) const;
  /// Point given in the order of `variables`.
  long evaluate(const std::vector<std::string>& variables,
                std::span<const long> point) const;
  LinearForm without_constant() const;
  Polynomial to_polynomial(const std::vector<std::string>& variables) const;
  std::string to_string() const;

  LinearForm& operator+=(const LinearForm& rhs);
  LinearForm& operator*=(long scalar);
  friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
  friend LinearForm operator*(LinearForm a, long s) { return a *= s; }

  friend bool operator==(const LinearForm&, const LinearForm&) = default;
  friend std::strong_ordering operator<=>(const LinearForm& a, const LinearForm& b);
};

/// (form)! raised to a nonzero integer power.
struct GammaFactor {
  LinearForm form;
  int exponent = 1;
  friend bool operator==(const GammaFactor&, const GammaFactor&) = default;
};

enum class TermTag { Finite, Zero, Undefined };

struct TermValue {
  TermTag tag = TermTag::Undefined;
  Rational value;  // meaningful for Finite only

  static TermValue finite(Rational v) { return {TermTag::Finite, std::move(v)}; }
  static TermValue zero() { return {TermTag::Zero, 0}; }
  static TermValue undefined() { return {TermTag::Undefined, 0}; }

  bool is_finite() const { return tag == TermTag::Finite; }
  bool is_undefined() const { return tag == TermTag::Undefined; }
  /// Numeric value with Zero read as 0; throws UndefinedTerm for Undefined.
  Rational numeric() const;
};

using GeometricMap = std::map<std::string, Rational, VariableLess>;

/// Proper hypergeometric term
///
///   constant * prod_v base_v^v * prefactor(vars) * prod_i (form_i)!^e_i
///
/// kept in canonical form: bases of 1 are dropped, equal forms are merged,
/// factors are sorted by (form, exponent), and the content and sign of the
/// prefactor numerator live in the constant. The zero term has constant 0,
/// prefactor 0 and nothing else.
class ProperTerm {
 public:
  ProperTerm() = default;
  ProperTerm(std::vector<std::string> variables, Rational constant,
             GeometricMap geometric, RationalFunction prefactor,
             std::vector<GammaFactor> factors);

  static ProperTerm zero(std::vector<std::string> variables);
  static ProperTerm constant_term(std::vector<std::string> variables,
                                  const Rational& value);

  const std::vector<std::string>& variables() const { return vars_; }
  const Rational& constant() const { return constant_; }
  const GeometricMap& geometric() const { return geometric_; }
  const RationalFunction& prefactor() const { return prefactor_; }
  const std::vector<GammaFactor>& factors() const { return factors_; }

  bool is_zero() const { return constant_ == 0; }
  std::size_t index_of(std::string_view name) const;

  ProperTerm scaled(const Rational& c) const;
  /// Same term with the prefactor multiplied by `r`.
  ProperTerm times(const RationalFunction& r) const;
  ProperTerm operator-() const { return scaled(-1); }

  /// Human-readable closed form, e.g. (-1)^m*m!^10*(...)/(64*(2*m + 1)!^5).
  std::string to_string() const;

  friend bool operator==(const ProperTerm&, const ProperTerm&) = default;

 private:
  void canonicalize();

  std::vector<std::string> vars_;
  Rational constant_ = 0;
  GeometricMap geometric_;
  RationalFunction prefactor_;
  std::vector<GammaFactor> factors_;
};

/// Exact value at an integer point. A reciprocal factorial at a negative
/// integer makes the term Zero (this takes precedence); a numerator
/// factorial at a negative integer or a prefactor pole makes it Undefined.
TermValue eval_exact(const ProperTerm& term, std::span<const long> point);
TermValue eval_exact(const ProperTerm& term,
                     const std::map<std::string, long>& point);

/// T(var + 1) / T(var) as a canonical rational function.
RationalFunction shift_ratio(const ProperTerm& term, std::string_view var);

/// Unreduced numerator/denominator of the shift ratio; no gcd is taken.
struct RawRatio {
  Polynomial num;
  Polynomial den;
};
RawRatio shift_ratio_raw(const ProperTerm& term, std::string_view var);

/// Rational-coefficient image used by the checked substitution overload.
struct AffineImage {
  std::map<std::string, Rational, VariableLess> coeffs;
  Rational constant = 0;
};

using Substitution = std::map<std::string, LinearForm, VariableLess>;

/// Replace each old variable by an integer-linear form in new_variables.
/// Old variables missing from the map are kept when they are also new
/// variables.
ProperTerm substitute_affine(const ProperTerm& term,
                             std::vector<std::string> new_variables,
                             const Substitution& map);
/// Throws NonIntegerSubstitution when an image is not integer-linear.
ProperTerm substitute_affine(const ProperTerm& term,
                             std::vector<std::string> new_variables,
                             const std::map<std::string, AffineImage>& map);

/// A / B as a rational function, or nullopt when the factorial parts do not
/// telescope (different geometric bases or different net exponents in some
/// family of forms sharing a non-constant part).
std::optional<RationalFunction> similarity_ratio(const ProperTerm& a,
                                                 const ProperTerm& b);
std::optional<RawRatio> similarity_ratio_raw(const ProperTerm& a,
                                             const ProperTerm& b);

/// Rewrite each family of factorials over one base and fold linear factors
/// of the prefactor back into the factorials where they divide evenly.
ProperTerm normalize_gamma(const ProperTerm& term);

/// Single term equal to the sum, or nullopt when the terms are not similar.
std::optional<ProperTerm> combine_similar(std::span<const ProperTerm> terms);

}  // namespace wzaccel
