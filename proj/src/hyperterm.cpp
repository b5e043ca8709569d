#include "wzaccel/hyperterm.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "wzaccel/errors.hpp"

namespace wzaccel {

// ---------------------------------------------------------------- LinearForm

LinearForm LinearForm::variable(const std::string& name, long coeff,
                                long constant) {
  LinearForm f;
  if (coeff != 0) f.coeffs[name] = coeff;
  f.constant = constant;
  return f;
}

long LinearForm::coefficient(const std::string& name) const {
  auto it = coeffs.find(name);
  return it == coeffs.end() ? 0 : it->second;
}

long LinearForm::evaluate(const std::vector<std::string>& variables,
                          std::span<const long> point) const {
  long v = constant;
  for (const auto& [name, c] : coeffs) {
    auto it = std::find(variables.begin(), variables.end(), name);
    if (it == variables.end()) {
      throw VariableMismatch("form uses undeclared variable '" + name + "'");
    }
    v += c * point[static_cast<std::size_t>(it - variables.begin())];
  }
  return v;
}

LinearForm LinearForm::without_constant() const {
  LinearForm f = *this;
  f.constant = 0;
  return f;
}

Polynomial LinearForm::to_polynomial(
    const std::vector<std::string>& variables) const {
  Polynomial p = Polynomial::constant(variables, constant);
  for (const auto& [name, c] : coeffs) {
    p += Polynomial::variable(variables, name) * Rational(c);
  }
  return p;
}

std::string LinearForm::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [name, c] : coeffs) {
    const long mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag != 1) os << mag << "*";
    os << name;
    first = false;
  }
  if (first) {
    os << constant;
  } else if (constant != 0) {
    os << (constant < 0 ? " - " : " + ") << (constant < 0 ? -constant : constant);
  }
  return os.str();
}

LinearForm& LinearForm::operator+=(const LinearForm& rhs) {
  for (const auto& [name, c] : rhs.coeffs) {
    long& slot = coeffs[name];
    slot += c;
    if (slot == 0) coeffs.erase(name);
  }
  constant += rhs.constant;
  return *this;
}

LinearForm& LinearForm::operator*=(long scalar) {
  if (scalar == 0) {
    coeffs.clear();
    constant = 0;
    return *this;
  }
  for (auto& [name, c] : coeffs) c *= scalar;
  constant *= scalar;
  return *this;
}

std::strong_ordering operator<=>(const LinearForm& a, const LinearForm& b) {
  auto ia = a.coeffs.begin();
  auto ib = b.coeffs.begin();
  const VariableLess less;
  for (; ia != a.coeffs.end() && ib != b.coeffs.end(); ++ia, ++ib) {
    if (ia->first != ib->first) {
      return less(ia->first, ib->first) ? std::strong_ordering::less
                                        : std::strong_ordering::greater;
    }
    if (auto c = ia->second <=> ib->second; c != 0) return c;
  }
  if (ia != a.coeffs.end()) return std::strong_ordering::greater;
  if (ib != b.coeffs.end()) return std::strong_ordering::less;
  return a.constant <=> b.constant;
}

// ------------------------------------------------------------------ TermValue

Rational TermValue::numeric() const {
  switch (tag) {
    case TermTag::Finite:
      return value;
    case TermTag::Zero:
      return 0;
    case TermTag::Undefined:
      break;
  }
  throw UndefinedTerm("term is undefined at this point");
}

// ---------------------------------------------------------------- ProperTerm

ProperTerm::ProperTerm(std::vector<std::string> variables, Rational constant,
                       GeometricMap geometric, RationalFunction prefactor,
                       std::vector<GammaFactor> factors)
    : vars_(std::move(variables)),
      constant_(std::move(constant)),
      geometric_(std::move(geometric)),
      prefactor_(std::move(prefactor)),
      factors_(std::move(factors)) {
  canonicalize();
}

ProperTerm ProperTerm::zero(std::vector<std::string> variables) {
  return ProperTerm(variables, 0, {}, RationalFunction::constant(variables, 0), {});
}

ProperTerm ProperTerm::constant_term(std::vector<std::string> variables,
                                     const Rational& value) {
  return ProperTerm(variables, value, {}, RationalFunction::constant(variables, 1),
                    {});
}

void ProperTerm::canonicalize() {
  if (canonical_variables(vars_) != vars_) {
    throw VariableMismatch("term variables must be unique and in canonical order");
  }
  if (prefactor_.variables() != vars_) {
    prefactor_ = prefactor_.embed(vars_);
  }
  const auto declared = [this](const std::string& name) {
    return std::find(vars_.begin(), vars_.end(), name) != vars_.end();
  };

  if (constant_ == 0 || prefactor_.is_zero()) {
    constant_ = 0;
    geometric_.clear();
    factors_.clear();
    prefactor_ = RationalFunction::constant(vars_, 0);
    return;
  }

  for (auto it = geometric_.begin(); it != geometric_.end();) {
    if (!declared(it->first)) {
      throw VariableMismatch("geometric base on undeclared variable '" + it->first + "'");
    }
    if (it->second == 0) throw InvalidArgument("geometric base must be nonzero");
    if (it->second == 1) {
      it = geometric_.erase(it);
    } else {
      ++it;
    }
  }

  std::map<LinearForm, int> merged;
  for (const auto& f : factors_) {
    for (const auto& [name, c] : f.form.coeffs) {
      if (!declared(name)) {
        throw VariableMismatch("factorial uses undeclared variable '" + name + "'");
      }
      if (c == 0) throw InvalidArgument("linear forms must be stored sparsely");
    }
    merged[f.form] += f.exponent;
  }
  factors_.clear();
  for (const auto& [form, e] : merged) {
    if (e != 0) factors_.push_back({form, e});
  }

  Rational c = prefactor_.numerator().content();
  if (prefactor_.numerator().leading_coefficient() < 0) c = -c;
  if (c != 1) {
    prefactor_ = RationalFunction::from_coprime(prefactor_.numerator() * (Rational(1) / c),
                                                prefactor_.denominator());
    constant_ *= c;
  }
}

std::size_t ProperTerm::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i] == name) return i;
  }
  throw VariableMismatch("term has no variable '" + std::string(name) + "'");
}

ProperTerm ProperTerm::scaled(const Rational& c) const {
  ProperTerm out = *this;
  out.constant_ *= c;
  out.canonicalize();
  return out;
}

ProperTerm ProperTerm::times(const RationalFunction& r) const {
  ProperTerm out = *this;
  out.prefactor_ = prefactor_ * r;
  out.canonicalize();
  return out;
}

namespace {

bool needs_parens(const Polynomial& p) { return p.size() > 1; }

std::string factor_text(const GammaFactor& f, int power) {
  std::string arg = f.form.to_string();
  const bool bare = f.form.constant == 0 && f.form.coeffs.size() == 1 &&
                    f.form.coeffs.begin()->second == 1;
  if (!bare && !(f.form.coeffs.empty() && f.form.constant >= 0)) arg = "(" + arg + ")";
  std::string out = arg + "!";
  if (power != 1) out += "^" + std::to_string(power);
  return out;
}

}  // namespace

std::string ProperTerm::to_string() const {
  if (is_zero()) return "0";
  std::vector<std::string> top;
  std::vector<std::string> bottom;
  const Rational mag = abs(constant_);
  if (mag.get_num() != 1) top.push_back(mag.get_num().get_str());
  if (mag.get_den() != 1) bottom.push_back(mag.get_den().get_str());
  for (const auto& [v, b] : geometric_) {
    const bool plain = b > 0 && b.get_den() == 1;
    top.push_back((plain ? to_canonical_string(b) : "(" + to_canonical_string(b) + ")") +
                  "^" + v);
  }
  const Polynomial& pn = prefactor_.numerator();
  const Polynomial& pd = prefactor_.denominator();
  if (!pn.is_constant()) {
    top.push_back(needs_parens(pn) ? "(" + pn.to_string() + ")" : pn.to_string());
  }
  if (!pd.is_constant()) {
    bottom.push_back(needs_parens(pd) ? "(" + pd.to_string() + ")" : pd.to_string());
  }
  for (const auto& f : factors_) {
    if (f.exponent > 0) {
      top.push_back(factor_text(f, f.exponent));
    } else {
      bottom.push_back(factor_text(f, -f.exponent));
    }
  }
  const auto join = [](const std::vector<std::string>& parts) {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) s += "*";
      s += parts[i];
    }
    return s;
  };
  std::string out = constant_ < 0 ? "-" : "";
  out += top.empty() ? "1" : join(top);
  if (!bottom.empty()) {
    out += "/";
    out += bottom.size() == 1 ? bottom[0] : "(" + join(bottom) + ")";
  }
  return out;
}

// ----------------------------------------------------------------- evaluation

TermValue eval_exact(const ProperTerm& term, std::span<const long> point) {
  const auto& vars = term.variables();
  if (point.size() != vars.size()) {
    throw VariableMismatch("evaluation point has wrong dimension");
  }
  if (term.is_zero()) return TermValue::finite(0);

  bool zero_fired = false;
  bool undefined = false;
  std::vector<long> args;
  args.reserve(term.factors().size());
  for (const auto& f : term.factors()) {
    const long x = f.form.evaluate(vars, point);
    args.push_back(x);
    if (x < 0) {
      if (f.exponent < 0) {
        zero_fired = true;
      } else {
        undefined = true;
      }
    }
  }
  if (zero_fired) return TermValue::zero();
  if (undefined) return TermValue::undefined();

  std::vector<Rational> rpoint(point.begin(), point.end());
  const auto pre = term.prefactor().evaluate(rpoint);
  if (!pre) return TermValue::undefined();

  Integer num = 1;
  Integer den = 1;
  Integer fac;
  for (std::size_t i = 0; i < args.size(); ++i) {
    mpz_fac_ui(fac.get_mpz_t(), static_cast<unsigned long>(args[i]));
    const int e = term.factors()[i].exponent;
    Integer p;
    mpz_pow_ui(p.get_mpz_t(), fac.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
    if (e > 0) {
      num *= p;
    } else {
      den *= p;
    }
  }
  Rational value(num, den);
  value.canonicalize();
  value *= term.constant();
  value *= *pre;
  for (const auto& [v, base] : term.geometric()) {
    value *= rational_pow(base, point[term.index_of(v)]);
  }
  return TermValue::finite(value);
}

TermValue eval_exact(const ProperTerm& term,
                     const std::map<std::string, long>& point) {
  std::vector<long> p;
  for (const auto& v : term.variables()) {
    auto it = point.find(v);
    if (it == point.end()) {
      throw VariableMismatch("point does not assign variable '" + v + "'");
    }
    p.push_back(it->second);
  }
  return eval_exact(term, p);
}

// ---------------------------------------------------------------- shift ratio

namespace {

// prod_{i=from}^{to} (base + i), empty product is 1.
Polynomial rising(const Polynomial& base, long from, long to) {
  Polynomial p = Polynomial::constant(base.variables(), 1);
  for (long i = from; i <= to; ++i) {
    p *= base + Polynomial::constant(base.variables(), i);
  }
  return p;
}

}  // namespace

RawRatio shift_ratio_raw(const ProperTerm& term, std::string_view var) {
  const auto& vars = term.variables();
  const std::size_t v = term.index_of(var);
  if (term.is_zero()) throw ZeroTerm("shift ratio of the zero term");

  Polynomial num = Polynomial::constant(vars, 1);
  Polynomial den = Polynomial::constant(vars, 1);
  if (auto it = term.geometric().find(std::string(var)); it != term.geometric().end()) {
    num *= it->second;
  }
  const Polynomial& pn = term.prefactor().numerator();
  const Polynomial& pd = term.prefactor().denominator();
  if (!pn.is_constant() || !pd.is_constant()) {
    num *= pn.shift(v, 1) * pd;
    den *= pd.shift(v, 1) * pn;
  }
  for (const auto& f : term.factors()) {
    const long c = f.form.coefficient(std::string(var));
    if (c == 0) continue;
    const Polynomial base = f.form.to_polynomial(vars);
    // (x + c)! / x! for c > 0, 1 / (x (x-1) ... (x+c+1)) for c < 0.
    const Polynomial step = c > 0 ? rising(base, 1, c) : rising(base, c + 1, 0);
    const bool up = (c > 0) == (f.exponent > 0);
    const Polynomial pw = step.pow(static_cast<unsigned>(std::abs(f.exponent)));
    if (up) {
      num *= pw;
    } else {
      den *= pw;
    }
  }
  return {std::move(num), std::move(den)};
}

RationalFunction shift_ratio(const ProperTerm& term, std::string_view var) {
  RawRatio raw = shift_ratio_raw(term, var);
  return RationalFunction(raw.num, raw.den);
}

// --------------------------------------------------------------- substitution

ProperTerm substitute_affine(const ProperTerm& term,
                             std::vector<std::string> new_variables,
                             const Substitution& map) {
  new_variables = canonical_variables(std::move(new_variables));
  const auto& old_vars = term.variables();
  std::vector<LinearForm> images;
  for (const auto& v : old_vars) {
    auto it = map.find(v);
    if (it != map.end()) {
      images.push_back(it->second);
    } else if (std::find(new_variables.begin(), new_variables.end(), v) !=
               new_variables.end()) {
      images.push_back(LinearForm::variable(v));
    } else {
      throw InvalidArgument("substitution does not map variable '" + v + "'");
    }
    for (const auto& [name, c] : images.back().coeffs) {
      if (std::find(new_variables.begin(), new_variables.end(), name) ==
          new_variables.end()) {
        throw VariableMismatch("image uses undeclared variable '" + name + "'");
      }
    }
  }
  if (term.is_zero()) return ProperTerm::zero(new_variables);

  std::vector<GammaFactor> factors;
  for (const auto& f : term.factors()) {
    LinearForm g = LinearForm::variable("", 0, f.form.constant);
    for (const auto& [name, c] : f.form.coeffs) {
      const auto idx = static_cast<std::size_t>(
          std::find(old_vars.begin(), old_vars.end(), name) - old_vars.begin());
      g += images[idx] * c;
    }
    factors.push_back({g, f.exponent});
  }

  Rational constant = term.constant();
  GeometricMap geometric;
  for (const auto& [v, base] : term.geometric()) {
    const auto& img = images[term.index_of(v)];
    constant *= rational_pow(base, img.constant);
    for (const auto& [name, c] : img.coeffs) {
      auto [it, inserted] = geometric.try_emplace(name, 1);
      it->second *= rational_pow(base, c);
    }
  }

  std::vector<Polynomial> polys;
  for (const auto& img : images) polys.push_back(img.to_polynomial(new_variables));
  RationalFunction prefactor = term.prefactor().compose(new_variables, polys);

  return ProperTerm(new_variables, constant, geometric, prefactor, factors);
}

ProperTerm substitute_affine(const ProperTerm& term,
                             std::vector<std::string> new_variables,
                             const std::map<std::string, AffineImage>& map) {
  Substitution forms;
  for (const auto& [v, img] : map) {
    if (img.constant.get_den() != 1) {
      throw NonIntegerSubstitution("constant of image of '" + v + "'");
    }
    LinearForm f = LinearForm::variable("", 0, img.constant.get_num().get_si());
    for (const auto& [name, c] : img.coeffs) {
      if (c.get_den() != 1) {
        throw NonIntegerSubstitution("coefficient of '" + name + "' in image of '" + v + "'");
      }
      if (c != 0) f.coeffs[name] = c.get_num().get_si();
    }
    forms[v] = f;
  }
  return substitute_affine(term, std::move(new_variables), forms);
}

// ----------------------------------------------------------------- similarity

namespace {

using FamilyKey = std::map<std::string, long, VariableLess>;

struct FamilyMember {
  long constant;
  int exponent;
};

struct Family {
  std::vector<FamilyMember> lhs;
  std::vector<FamilyMember> rhs;
};

int net_exponent(const std::vector<FamilyMember>& members) {
  int e = 0;
  for (const auto& m : members) e += m.exponent;
  return e;
}

long min_constant(const Family& fam) {
  long c = 0;
  bool first = true;
  for (const auto* side : {&fam.lhs, &fam.rhs}) {
    for (const auto& m : *side) {
      c = first ? m.constant : std::min(c, m.constant);
      first = false;
    }
  }
  return c;
}

Polynomial key_polynomial(const FamilyKey& key, const std::vector<std::string>& vars) {
  LinearForm f;
  f.coeffs = key;
  return f.to_polynomial(vars);
}

// Multiply (num, den) by prod over members of ((L0+base+1)...(L0+c))^e,
// inverted when `invert` is set.
void expand_members(const std::vector<FamilyMember>& members, const Polynomial& l0,
                    long base, bool invert, Polynomial& num, Polynomial& den) {
  for (const auto& m : members) {
    if (m.constant == base) continue;
    const Polynomial p =
        rising(l0, base + 1, m.constant).pow(static_cast<unsigned>(std::abs(m.exponent)));
    const bool to_num = (m.exponent > 0) != invert;
    if (to_num) {
      num *= p;
    } else {
      den *= p;
    }
  }
}

}  // namespace

std::optional<RawRatio> similarity_ratio_raw(const ProperTerm& a,
                                             const ProperTerm& b) {
  if (a.variables() != b.variables()) {
    throw VariableMismatch("similarity of terms over different variables");
  }
  const auto& vars = a.variables();
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) {
    return RawRatio{Polynomial(vars), Polynomial::constant(vars, 1)};
  }
  if (a.geometric() != b.geometric()) return std::nullopt;

  std::map<FamilyKey, Family> families;
  for (const auto& f : a.factors()) {
    families[f.form.coeffs].lhs.push_back({f.form.constant, f.exponent});
  }
  for (const auto& f : b.factors()) {
    families[f.form.coeffs].rhs.push_back({f.form.constant, f.exponent});
  }

  Polynomial num = Polynomial::constant(vars, a.constant());
  Polynomial den = Polynomial::constant(vars, b.constant());
  for (const auto& [key, fam] : families) {
    if (net_exponent(fam.lhs) != net_exponent(fam.rhs)) return std::nullopt;
    const long base = min_constant(fam);
    const Polynomial l0 = key_polynomial(key, vars);
    expand_members(fam.lhs, l0, base, false, num, den);
    expand_members(fam.rhs, l0, base, true, num, den);
  }
  num *= a.prefactor().numerator() * b.prefactor().denominator();
  den *= a.prefactor().denominator() * b.prefactor().numerator();
  return RawRatio{std::move(num), std::move(den)};
}

std::optional<RationalFunction> similarity_ratio(const ProperTerm& a,
                                                 const ProperTerm& b) {
  auto raw = similarity_ratio_raw(a, b);
  if (!raw) return std::nullopt;
  return RationalFunction(raw->num, raw->den);
}

// ---------------------------------------------------------------- normal form

ProperTerm normalize_gamma(const ProperTerm& term) {
  if (term.is_zero()) return term;
  const auto& vars = term.variables();

  std::map<FamilyKey, Family> families;
  for (const auto& f : term.factors()) {
    families[f.form.coeffs].lhs.push_back({f.form.constant, f.exponent});
  }

  Polynomial num = term.prefactor().numerator();
  Polynomial den = term.prefactor().denominator();
  struct Base {
    FamilyKey key;
    Polynomial l0;
    long constant;
    int exponent;
  };
  std::vector<Base> bases;
  bool expanded = false;
  for (const auto& [key, fam] : families) {
    const long base = min_constant(fam);
    const Polynomial l0 = key_polynomial(key, vars);
    expanded = expanded || fam.lhs.size() > 1;
    expand_members(fam.lhs, l0, base, false, num, den);
    const int e = net_exponent(fam.lhs);
    if (e != 0) bases.push_back({key, l0, base, e});
  }
  if (expanded) {
    RationalFunction pre(num, den);
    num = pre.numerator();
    den = pre.denominator();
  }

  const auto try_divide = [](Polynomial& p, const Polynomial& d) {
    if (p.is_constant()) return false;
    auto q = divide_exact(p, d);
    if (!q) return false;
    p = *std::move(q);
    return true;
  };

  // Each successful fold lowers deg(num) + deg(den), so this terminates.
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& b : bases) {
      for (;;) {
        const Polynomial x = b.l0 + Polynomial::constant(vars, b.constant);
        const Polynomial x1 = x + Polynomial::constant(vars, 1);
        const unsigned e = static_cast<unsigned>(std::abs(b.exponent));
        Polynomial& up_side = b.exponent > 0 ? num : den;
        Polynomial& down_side = b.exponent > 0 ? den : num;
        if (!x1.is_constant() && try_divide(up_side, x1.pow(e))) {
          ++b.constant;
          changed = true;
          continue;
        }
        if (!x.is_constant() && try_divide(down_side, x.pow(e))) {
          --b.constant;
          changed = true;
          continue;
        }
        break;
      }
    }
  }

  std::vector<GammaFactor> factors;
  for (const auto& b : bases) {
    LinearForm f;
    f.coeffs = b.key;
    f.constant = b.constant;
    factors.push_back({f, b.exponent});
  }
  // Dividing either side of a coprime pair keeps it coprime.
  return ProperTerm(vars, term.constant(), term.geometric(),
                    RationalFunction::from_coprime(num, den), factors);
}

namespace {

// Denominator kept as a multiset of factors so that a least common
// denominator is available without gcds. Linear factors are irreducible.
struct FactoredDen {
  std::vector<std::pair<Polynomial, int>> factors;

  void add(const Polynomial& p, int mult) {
    if (p.is_constant()) return;
    for (auto& [q, m] : factors) {
      if (q == p) {
        m += mult;
        return;
      }
    }
    factors.emplace_back(p, mult);
  }
  int multiplicity(const Polynomial& p) const {
    for (const auto& [q, m] : factors) {
      if (q == p) return m;
    }
    return 0;
  }
};

}  // namespace

std::optional<ProperTerm> combine_similar(std::span<const ProperTerm> terms) {
  if (terms.empty()) throw InvalidArgument("combine_similar needs at least one term");
  const ProperTerm* ref = nullptr;
  for (const auto& t : terms) {
    if (t.variables() != terms.front().variables()) {
      throw VariableMismatch("combining terms over different variables");
    }
    if (!ref && !t.is_zero()) ref = &t;
  }
  if (!ref) return ProperTerm::zero(terms.front().variables());
  const auto& vars = ref->variables();

  std::vector<const ProperTerm*> live;
  for (const auto& t : terms) {
    if (t.is_zero()) continue;
    if (t.geometric() != ref->geometric()) return std::nullopt;
    live.push_back(&t);
  }

  // Per family: members of each live term, and the common base constant.
  std::map<FamilyKey, std::vector<std::vector<FamilyMember>>> families;
  for (std::size_t i = 0; i < live.size(); ++i) {
    for (const auto& f : live[i]->factors()) {
      auto& slot = families[f.form.coeffs];
      slot.resize(live.size());
      slot[i].push_back({f.form.constant, f.exponent});
    }
  }
  std::vector<GammaFactor> core;
  std::map<FamilyKey, long> bases;
  for (auto& [key, per_term] : families) {
    per_term.resize(live.size());
    const int net = net_exponent(per_term.front());
    long base = std::numeric_limits<long>::max();
    for (const auto& members : per_term) {
      if (net_exponent(members) != net) return std::nullopt;
      for (const auto& m : members) base = std::min(base, m.constant);
    }
    bases[key] = base;
    if (net != 0) {
      LinearForm f;
      f.coeffs = key;
      f.constant = base;
      core.push_back({f, net});
    }
  }

  // term_i = core * nums[i] / dens[i]
  std::vector<Polynomial> nums;
  std::vector<FactoredDen> dens;
  for (std::size_t i = 0; i < live.size(); ++i) {
    Polynomial num = live[i]->prefactor().numerator() * live[i]->constant();
    FactoredDen den;
    den.add(live[i]->prefactor().denominator(), 1);
    for (const auto& [key, per_term] : families) {
      const Polynomial l0 = key_polynomial(key, vars);
      for (const auto& m : per_term[i]) {
        for (long j = bases.at(key) + 1; j <= m.constant; ++j) {
          const Polynomial lin = l0 + Polynomial::constant(vars, j);
          if (m.exponent > 0) {
            num *= lin.pow(static_cast<unsigned>(m.exponent));
          } else {
            den.add(lin, -m.exponent);
          }
        }
      }
    }
    nums.push_back(std::move(num));
    dens.push_back(std::move(den));
  }

  FactoredDen lcd;
  for (const auto& d : dens) {
    for (const auto& [p, m] : d.factors) {
      const int have = lcd.multiplicity(p);
      if (m > have) lcd.add(p, m - have);
    }
  }
  Polynomial total(vars);
  for (std::size_t i = 0; i < live.size(); ++i) {
    Polynomial term = nums[i];
    for (const auto& [p, m] : lcd.factors) {
      const int extra = m - dens[i].multiplicity(p);
      if (extra > 0) term *= p.pow(static_cast<unsigned>(extra));
    }
    total += term;
  }
  if (total.is_zero()) return ProperTerm::zero(vars);

  bool opaque_left = false;
  Polynomial den = Polynomial::constant(vars, 1);
  for (auto& [p, m] : lcd.factors) {
    while (m > 0) {
      auto q = divide_exact(total, p);
      if (!q) break;
      total = *std::move(q);
      --m;
    }
    if (m > 0) {
      den *= p.pow(static_cast<unsigned>(m));
      if (p.total_degree() > 1) opaque_left = true;
    }
  }
  const RationalFunction pre = opaque_left ? RationalFunction(total, den)
                                           : RationalFunction::from_coprime(total, den);
  return normalize_gamma(ProperTerm(vars, 1, ref->geometric(), pre, std::move(core)));
}

}  // namespace wzaccel
