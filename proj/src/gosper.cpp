// Gosper's algorithm for indefinite hypergeometric summation, with every
// variable other than the summation variable carried as a symbolic
// parameter. Polynomials over Q(params)[var] are represented by polynomials
// in all variables; gcds over Q(params)[var] are primitive parts in var of
// the multivariate gcd.

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "wzaccel/errors.hpp"
#include "wzaccel/linear_solve.hpp"
#include "wzaccel/wz.hpp"

namespace wzaccel {

namespace {

Polynomial quotient(const Polynomial& a, const Polynomial& b) {
  auto q = divide_exact(a, b);
  if (!q) throw std::logic_error("gosper: expected exact division");
  return *std::move(q);
}

// Cauchy bound 1 + max |c_i / c_d| on the roots of a univariate polynomial.
Rational cauchy_bound(const Polynomial& p, std::size_t var) {
  const auto coeffs = p.coefficients_in(var);
  const Rational lc = abs(coeffs.back().constant_term());
  Rational best = 0;
  for (std::size_t i = 0; i + 1 < coeffs.size(); ++i) {
    best = std::max(best, Rational(abs(coeffs[i].constant_term()) / lc));
  }
  return best + 1;
}

// Superset of the nonnegative integers j with gcd(A(var), B(var+j)) != 1
// over the parameter field. Parameters are specialized to integers that keep
// both leading coefficients nonzero, which can only add common factors.
std::vector<long> dispersion_candidates(const Polynomial& A, const Polynomial& B,
                                        std::size_t var) {
  const auto& vars = A.variables();
  const int da = A.degree(var);
  const int db = B.degree(var);
  if (da <= 0 || db <= 0) return {};
  const Polynomial lca = A.coefficient_in(var, da);
  const Polynomial lcb = B.coefficient_in(var, db);

  std::vector<Rational> point(vars.size(), 0);
  bool found = false;
  for (long attempt = 0; attempt < 64 && !found; ++attempt) {
    for (std::size_t i = 0; i < vars.size(); ++i) {
      point[i] = i == var ? 0 : 2 + static_cast<long>(i) * 3 + attempt * 5;
    }
    found = lca.evaluate(point) != 0 && lcb.evaluate(point) != 0;
  }
  if (!found) throw std::logic_error("gosper: no admissible specialization");

  Polynomial a0 = A;
  Polynomial b0 = B;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i == var) continue;
    a0 = a0.partial_evaluate(i, point[i]);
    b0 = b0.partial_evaluate(i, point[i]);
  }
  const Rational bound = cauchy_bound(a0, var) + cauchy_bound(b0, var);
  const long limit = mpz_class(bound.get_num() / bound.get_den()).get_si() + 1;

  std::vector<long> out;
  for (long j = 0; j <= limit; ++j) {
    if (gcd(a0, b0.shift(var, j)).degree(var) > 0) out.push_back(j);
  }
  return out;
}

}  // namespace

std::optional<RationalFunction> gosper(const ProperTerm& term, std::string_view var) {
  if (term.is_zero()) throw ZeroTerm("gosper: summand is identically zero");
  const auto& vars = term.variables();
  const std::size_t v = term.index_of(var);

  const RationalFunction ratio = shift_ratio(term, var);
  if (ratio.is_zero()) return std::nullopt;
  const Polynomial& A = ratio.numerator();
  const Polynomial& B = ratio.denominator();

  // ratio = (p / q) * c(var+1) / c(var) with gcd(p(var), q(var+j)) = 1, j >= 0.
  Polynomial p = A;
  Polynomial q = B;
  Polynomial c = Polynomial::constant(vars, 1);
  for (long j : dispersion_candidates(A, B, v)) {
    Polynomial g = gcd(p, q.shift(v, j));
    if (g.degree(v) <= 0) continue;
    g = primitive_part_in(g, v);
    p = quotient(p, g);
    q = quotient(q, g.shift(v, -j));
    for (long i = 1; i <= j; ++i) c *= g.shift(v, -i);
  }

  // Solve p(var) x(var+1) - q(var-1) x(var) = c(var) for a polynomial x.
  const Polynomial q1 = q.shift(v, -1);
  const int dp = p.degree(v);
  const int dq = q.degree(v);
  const int dc = c.degree(v);
  const Polynomial lcp = p.coefficient_in(v, dp);
  const Polynomial lcq = q.coefficient_in(v, dq);

  long degree_bound;
  if (dp != dq || lcp != lcq) {
    degree_bound = dc - std::max(dp, dq);
  } else {
    degree_bound = dc - dp + 1;
    if (dp >= 1) {
      const Polynomial diff = q1.coefficient_in(v, dp - 1) - p.coefficient_in(v, dp - 1);
      auto ratio_c = divide_exact(diff, lcp);
      if (ratio_c && ratio_c->is_constant()) {
        const Rational r = ratio_c->constant_term();
        if (r.get_den() == 1) degree_bound = std::max(degree_bound, r.get_num().get_si());
      }
    }
  }
  if (degree_bound < 0) return std::nullopt;

  const Polynomial x_var = Polynomial::variable(vars, vars[v]);
  const Polynomial x_var1 = x_var + Polynomial::constant(vars, 1);
  std::vector<Polynomial> columns;
  int rows = dc + 1;
  Polynomial pow_k = Polynomial::constant(vars, 1);
  Polynomial pow_k1 = Polynomial::constant(vars, 1);
  for (long i = 0; i <= degree_bound; ++i) {
    columns.push_back(p * pow_k1 - q1 * pow_k);
    rows = std::max(rows, columns.back().degree(v) + 1);
    pow_k *= x_var;
    pow_k1 *= x_var1;
  }
  std::vector<std::vector<Polynomial>> matrix(
      rows, std::vector<Polynomial>(columns.size(), Polynomial(vars)));
  std::vector<Polynomial> rhs(rows, Polynomial(vars));
  for (std::size_t col = 0; col < columns.size(); ++col) {
    const auto coeffs = columns[col].coefficients_in(v);
    for (std::size_t r = 0; r < coeffs.size(); ++r) matrix[r][col] = coeffs[r];
  }
  const auto c_coeffs = c.coefficients_in(v);
  for (std::size_t r = 0; r < c_coeffs.size(); ++r) rhs[r] = c_coeffs[r];

  const auto solution = solve_linear(matrix, rhs);
  if (solution.status == SolveStatus::NoSolution) return std::nullopt;

  RationalFunction x = RationalFunction::constant(vars, 0);
  Polynomial mono = Polynomial::constant(vars, 1);
  for (const auto& xi : solution.x) {
    x += RationalFunction(mono) * xi;
    mono *= x_var;
  }
  RationalFunction S = RationalFunction(q1) * x / RationalFunction(c);

  // The antidifference must telescope exactly.
  const RationalFunction check = S.shift(v, 1) * ratio - S;
  if (check != RationalFunction::constant(vars, 1)) {
    throw std::logic_error("gosper: certificate failed re-verification");
  }
  return S;
}

}  // namespace wzaccel
