#include "wzaccel/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "wzaccel/errors.hpp"

namespace wzaccel {

bool GrlexGreater::operator()(const Exponents& lhs,
                              const Exponents& rhs) const {
  const int dl = std::accumulate(lhs.begin(), lhs.end(), 0);
  const int dr = std::accumulate(rhs.begin(), rhs.end(), 0);
  if (dl != dr) return dl > dr;
  return lhs > rhs;
}

std::vector<std::string> canonical_variables(std::vector<std::string> names) {
  std::sort(names.begin(), names.end(), VariableLess{});
  names.erase(std::unique(names.begin(), names.end()), names.end());
  return names;
}

std::vector<std::string> merge_variables(const std::vector<std::string>& lhs,
                                         const std::vector<std::string>& rhs) {
  std::vector<std::string> all = lhs;
  all.insert(all.end(), rhs.begin(), rhs.end());
  return canonical_variables(std::move(all));
}

Polynomial::Polynomial(std::vector<std::string> variables)
    : vars_(std::move(variables)) {
  if (canonical_variables(vars_) != vars_) {
    throw VariableMismatch("variable list must be unique and in canonical order");
  }
}

Polynomial Polynomial::constant(std::vector<std::string> variables,
                                const Rational& value) {
  Polynomial p(std::move(variables));
  p.add_term(Exponents(p.vars_.size(), 0), value);
  return p;
}

Polynomial Polynomial::variable(std::vector<std::string> variables,
                                std::string_view name) {
  Polynomial p(std::move(variables));
  Exponents e(p.vars_.size(), 0);
  e[p.index_of(name)] = 1;
  p.add_term(e, 1);
  return p;
}

Polynomial Polynomial::monomial(std::vector<std::string> variables,
                                Exponents exponents, const Rational& coeff) {
  Polynomial p(std::move(variables));
  if (exponents.size() != p.vars_.size()) {
    throw VariableMismatch("exponent vector length");
  }
  p.add_term(exponents, coeff);
  return p;
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Rational Polynomial::constant_term() const {
  auto it = terms_.find(Exponents(vars_.size(), 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::total_degree() const {
  if (terms_.empty()) return -1;
  const auto& e = terms_.begin()->first;
  return std::accumulate(e.begin(), e.end(), 0);
}

int Polynomial::degree(std::size_t var) const {
  if (terms_.empty()) return -1;
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

std::optional<std::size_t> Polynomial::find_variable(
    std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t Polynomial::index_of(std::string_view name) const {
  if (auto i = find_variable(name)) return *i;
  throw VariableMismatch("unknown variable '" + std::string(name) + "'");
}

const Exponents& Polynomial::leading_exponents() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return terms_.begin()->first;
}

const Rational& Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return terms_.begin()->second;
}

void Polynomial::add_term(const Exponents& exponents, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponents, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::check_compatible(const Polynomial& other) const {
  if (vars_ != other.vars_) {
    throw VariableMismatch("operands use different variable lists");
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  check_compatible(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  check_compatible(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  lhs.check_compatible(rhs);
  Polynomial out(lhs.vars_);
  Exponents e(lhs.vars_.size());
  for (const auto& [el, cl] : lhs.terms_) {
    for (const auto& [er, cr] : rhs.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = el[i] + er[i];
      out.add_term(e, cl * cr);
    }
  }
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(vars_, 1);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != vars_.size()) {
    throw VariableMismatch("evaluation point has wrong dimension");
  }
  // Cache powers per variable.
  std::vector<std::vector<Rational>> powers(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    powers[i].push_back(1);
    const int d = degree(i);
    for (int j = 1; j <= d; ++j) powers[i].push_back(powers[i].back() * point[i]);
  }
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) t *= powers[i][e[i]];
    }
    sum += t;
  }
  return sum;
}

Polynomial Polynomial::partial_evaluate(std::size_t var,
                                        const Rational& value) const {
  Polynomial out(vars_);
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    f[var] = 0;
    out.add_term(f, c * rational_pow(value, e[var]));
  }
  return out;
}

Polynomial Polynomial::substitute(std::size_t var,
                                  const Polynomial& value) const {
  check_compatible(value);
  const auto coeffs = coefficients_in(var);
  // Horner in the substituted variable.
  Polynomial out(vars_);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    out = out * value + *it;
  }
  return out;
}

Polynomial Polynomial::shift(std::size_t var, const Rational& by) const {
  if (by == 0) return *this;
  Polynomial image = variable(vars_, vars_.at(var));
  image.add_term(Exponents(vars_.size(), 0), by);
  return substitute(var, image);
}

Polynomial Polynomial::compose(std::vector<std::string> new_variables,
                               std::span<const Polynomial> images) const {
  if (images.size() != vars_.size()) {
    throw VariableMismatch("composition needs one image per variable");
  }
  for (const auto& img : images) {
    if (img.vars_ != new_variables) {
      throw VariableMismatch("composition image over wrong variables");
    }
  }
  std::vector<std::vector<Polynomial>> powers(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    powers[i].push_back(constant(new_variables, 1));
    const int d = degree(i);
    for (int j = 1; j <= d; ++j) powers[i].push_back(powers[i].back() * images[i]);
  }
  Polynomial out(new_variables);
  for (const auto& [e, c] : terms_) {
    Polynomial t = constant(new_variables, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) t *= powers[i][e[i]];
    }
    out += t;
  }
  return out;
}

Polynomial Polynomial::embed(const std::vector<std::string>& variables) const {
  if (variables == vars_) return *this;
  Polynomial out(variables);
  std::vector<std::size_t> where(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto j = out.find_variable(vars_[i]);
    if (!j) {
      if (degree(i) > 0) {
        throw VariableMismatch("cannot drop variable '" + vars_[i] + "'");
      }
      where[i] = variables.size();
    } else {
      where[i] = *j;
    }
  }
  for (const auto& [e, c] : terms_) {
    Exponents f(variables.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (where[i] < variables.size()) f[where[i]] = e[i];
    }
    out.add_term(f, c);
  }
  return out;
}

std::vector<Polynomial> Polynomial::coefficients_in(std::size_t var) const {
  const int d = degree(var);
  std::vector<Polynomial> out(d < 0 ? 0 : d + 1, Polynomial(vars_));
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    f[var] = 0;
    out[e[var]].add_term(f, c);
  }
  return out;
}

Polynomial Polynomial::coefficient_in(std::size_t var, int deg) const {
  Polynomial out(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] != deg) continue;
    Exponents f = e;
    f[var] = 0;
    out.add_term(f, c);
  }
  return out;
}

Rational Polynomial::content() const {
  if (terms_.empty()) return 0;
  Integer g = 0;
  Integer l = 1;
  for (const auto& [e, c] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational out(g, l);
  out.canonicalize();
  return out;
}

Polynomial Polynomial::primitive_part() const {
  if (terms_.empty()) return *this;
  Rational c = content();
  if (leading_coefficient() < 0) c = -c;
  Polynomial out = *this;
  out *= Rational(1) / c;
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = abs(c);
    const bool neg = c < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    const bool is_unit_monomial =
        std::any_of(e.begin(), e.end(), [](int x) { return x != 0; });
    bool wrote = false;
    if (mag != 1 || !is_unit_monomial) {
      os << to_canonical_string(mag);
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << "*";
      os << vars_[i];
      if (e[i] > 1) os << "^" << e[i];
      wrote = true;
    }
  }
  return os.str();
}

std::optional<Polynomial> divide_exact(const Polynomial& dividend,
                                       const Polynomial& divisor) {
  if (divisor.is_zero()) throw ZeroDenominator();
  if (dividend.variables() != divisor.variables()) {
    throw VariableMismatch("division operands use different variables");
  }
  const auto& vars = dividend.variables();
  Polynomial quotient(vars);
  Polynomial rest = dividend;
  const Exponents& lt = divisor.leading_exponents();
  const Rational& lc = divisor.leading_coefficient();
  Exponents e(vars.size());
  while (!rest.is_zero()) {
    const Exponents& lr = rest.leading_exponents();
    for (std::size_t i = 0; i < e.size(); ++i) {
      e[i] = lr[i] - lt[i];
      if (e[i] < 0) return std::nullopt;
    }
    const Polynomial t = Polynomial::monomial(vars, e, rest.leading_coefficient() / lc);
    quotient += t;
    rest -= t * divisor;
  }
  return quotient;
}

namespace {

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
  auto q = divide_exact(a, b);
  if (!q) throw std::logic_error("expected exact polynomial division");
  return *std::move(q);
}

Polynomial one_like(const Polynomial& p) {
  return Polynomial::constant(p.variables(), 1);
}

std::optional<std::size_t> first_involved(const Polynomial& a,
                                          const Polynomial& b) {
  for (std::size_t v = 0; v < a.variables().size(); ++v) {
    if (a.involves(v) || b.involves(v)) return v;
  }
  return std::nullopt;
}

// Both arguments nonzero with integer coefficients.
Polynomial gcd_nonzero(const Polynomial& a, const Polynomial& b) {
  if (a.is_constant() || b.is_constant()) return one_like(a);
  const auto var = first_involved(a, b);
  if (!var) return one_like(a);
  const std::size_t v = *var;
  if (!a.involves(v)) return gcd_nonzero(a, content_in(b, v));
  if (!b.involves(v)) return gcd_nonzero(content_in(a, v), b);

  const Polynomial ca = content_in(a, v);
  const Polynomial cb = content_in(b, v);
  Polynomial pa = exact_quotient(a, ca).primitive_part();
  Polynomial pb = exact_quotient(b, cb).primitive_part();
  const Polynomial gc = gcd_nonzero(ca, cb);

  if (pa.degree(v) < pb.degree(v)) std::swap(pa, pb);
  while (!pb.is_zero()) {
    Polynomial r = pseudo_remainder(pa, pb, v);
    pa = std::move(pb);
    if (r.is_zero()) break;
    if (r.degree(v) == 0) {
      pa = one_like(pa);
      break;
    }
    pb = primitive_part_in(r, v);
  }
  Polynomial g = pa.degree(v) == 0 ? one_like(pa) : primitive_part_in(pa, v);
  return (gc * g).primitive_part();
}

}  // namespace

Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b,
                            std::size_t var) {
  if (b.is_zero()) throw ZeroDenominator();
  const int db = b.degree(var);
  const Polynomial lcb = b.coefficient_in(var, db);
  Polynomial r = a;
  while (!r.is_zero() && r.degree(var) >= db) {
    const int dr = r.degree(var);
    Exponents shift(a.variables().size(), 0);
    shift[var] = dr - db;
    const Polynomial lead =
        r.coefficient_in(var, dr) * Polynomial::monomial(a.variables(), shift, 1);
    r = lcb * r - lead * b;
  }
  return r;
}

Polynomial content_in(const Polynomial& p, std::size_t var) {
  if (p.is_zero()) return p;
  Polynomial g(p.variables());
  for (const auto& c : p.coefficients_in(var)) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c.primitive_part() : gcd_nonzero(g, c.primitive_part());
    if (g.is_constant()) break;
  }
  return g;
}

Polynomial primitive_part_in(const Polynomial& p, std::size_t var) {
  if (p.is_zero()) return p;
  return exact_quotient(p, content_in(p, var)).primitive_part();
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.variables() != b.variables()) {
    throw VariableMismatch("gcd operands use different variables");
  }
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  return gcd_nonzero(a.primitive_part(), b.primitive_part());
}

}  // namespace wzaccel
