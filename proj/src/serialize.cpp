#include "wzaccel/serialize.hpp"

#include <cmath>
#include <iomanip>
#include <set>
#include <sstream>

#include "wzaccel/errors.hpp"

namespace wzaccel {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ParseError(path + ": " + what);
}

void expect_keys(const Json& j, const std::string& path,
                 std::initializer_list<const char*> allowed) {
  if (!j.is_object()) fail(path, "expected an object");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) fail(path, "unknown field '" + key + "'");
  }
}

const Json& require(const Json& j, const char* key, const std::string& path) {
  auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing field '") + key + "'");
  return *it;
}

Rational parse_rational(const Json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a rational string such as \"-3/4\"");
  try {
    return parse_canonical_rational(j.get<std::string>());
  } catch (const Error& e) {
    fail(path, e.what());
  }
}

long parse_integer(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<long>();
}

Polynomial parse_polynomial(const Json& j, const std::string& path,
                            const std::vector<std::string>& vars) {
  if (!j.is_array()) fail(path, "expected a list of monomials");
  Polynomial p(vars);
  std::set<Exponents> seen;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = path + "[" + std::to_string(i) + "]";
    expect_keys(j[i], at, {"exponents", "coeff"});
    const Json& ex = require(j[i], "exponents", at);
    if (!ex.is_array() || ex.size() != vars.size()) {
      fail(at + ".exponents", "expected " + std::to_string(vars.size()) + " integers");
    }
    Exponents e;
    for (std::size_t v = 0; v < ex.size(); ++v) {
      const long x = parse_integer(ex[v], at + ".exponents[" + std::to_string(v) + "]");
      if (x < 0) fail(at + ".exponents", "exponents must be nonnegative");
      e.push_back(static_cast<int>(x));
    }
    const Rational c = parse_rational(require(j[i], "coeff", at), at + ".coeff");
    if (c == 0) fail(at + ".coeff", "zero coefficients are not stored");
    if (!seen.insert(e).second) fail(at, "duplicate monomial");
    p.add_term(e, c);
  }
  return p;
}

Json polynomial_to_json(const Polynomial& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) {
    out.push_back({{"exponents", e}, {"coeff", to_canonical_string(c)}});
  }
  return out;
}

const char* kind_name(BoundaryKind k) {
  return k == BoundaryKind::RowSumOfF ? "RowSumOfF" : "ColSumOfG";
}

Json finite_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

}  // namespace

Json term_to_json(const ProperTerm& term) {
  Json geometric = Json::object();
  for (const auto& [v, b] : term.geometric()) geometric[v] = to_canonical_string(b);
  Json factors = Json::array();
  for (const auto& f : term.factors()) {
    Json coeffs = Json::object();
    for (const auto& [v, c] : f.form.coeffs) coeffs[v] = c;
    factors.push_back({{"form", {{"coeffs", coeffs}, {"const", f.form.constant}}},
                       {"exp", f.exponent}});
  }
  return {{"variables", term.variables()},
          {"constant", to_canonical_string(term.constant())},
          {"geometric", geometric},
          {"prefactor",
           {{"num", polynomial_to_json(term.prefactor().numerator())},
            {"den", polynomial_to_json(term.prefactor().denominator())}}},
          {"factors", factors}};
}

ProperTerm term_from_json(const Json& j, const std::string& path,
                          const std::vector<std::string>& default_variables) {
  expect_keys(j, path, {"variables", "constant", "geometric", "prefactor", "factors"});
  std::vector<std::string> vars = default_variables;
  if (auto it = j.find("variables"); it != j.end()) {
    if (!it->is_array()) fail(path + ".variables", "expected a list of names");
    vars.clear();
    for (const auto& v : *it) {
      if (!v.is_string()) fail(path + ".variables", "expected a list of names");
      vars.push_back(v.get<std::string>());
    }
    if (canonical_variables(vars) != vars) {
      fail(path + ".variables", "variables must be distinct and in canonical order");
    }
  }
  const auto declared = [&vars](const std::string& name) {
    return std::find(vars.begin(), vars.end(), name) != vars.end();
  };

  const Rational constant = parse_rational(require(j, "constant", path), path + ".constant");

  GeometricMap geometric;
  if (auto it = j.find("geometric"); it != j.end()) {
    if (!it->is_object()) fail(path + ".geometric", "expected an object");
    for (const auto& [v, b] : it->items()) {
      const std::string at = path + ".geometric." + v;
      if (!declared(v)) fail(at, "undeclared variable");
      const Rational base = parse_rational(b, at);
      if (base == 0) fail(at, "geometric base must be nonzero");
      geometric[v] = base;
    }
  }

  RationalFunction prefactor = RationalFunction::constant(vars, 1);
  if (auto it = j.find("prefactor"); it != j.end()) {
    const std::string at = path + ".prefactor";
    expect_keys(*it, at, {"num", "den"});
    const Polynomial num = parse_polynomial(require(*it, "num", at), at + ".num", vars);
    Polynomial den = Polynomial::constant(vars, 1);
    if (auto d = it->find("den"); d != it->end()) den = parse_polynomial(*d, at + ".den", vars);
    if (den.is_zero()) fail(at + ".den", "denominator must be nonzero");
    prefactor = RationalFunction(num, den);
  }

  std::vector<GammaFactor> factors;
  if (auto it = j.find("factors"); it != j.end()) {
    if (!it->is_array()) fail(path + ".factors", "expected a list");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string at = path + ".factors[" + std::to_string(i) + "]";
      const Json& f = (*it)[i];
      expect_keys(f, at, {"form", "exp"});
      const Json& form = require(f, "form", at);
      expect_keys(form, at + ".form", {"coeffs", "const"});
      LinearForm lf;
      if (auto c = form.find("coeffs"); c != form.end()) {
        if (!c->is_object()) fail(at + ".form.coeffs", "expected an object");
        for (const auto& [v, x] : c->items()) {
          const std::string cat = at + ".form.coeffs." + v;
          if (!declared(v)) fail(cat, "undeclared variable");
          const long coeff = parse_integer(x, cat);
          if (coeff == 0) fail(cat, "zero coefficients are not stored");
          lf.coeffs[v] = coeff;
        }
      }
      lf.constant = parse_integer(require(form, "const", at + ".form"), at + ".form.const");
      const long e = parse_integer(require(f, "exp", at), at + ".exp");
      if (e == 0) fail(at + ".exp", "exponent must be nonzero");
      factors.push_back({lf, static_cast<int>(e)});
    }
  }
  try {
    return ProperTerm(vars, constant, geometric, prefactor, factors);
  } catch (const Error& e) {
    fail(path, e.what());
  }
}

Json entry_to_json(const CatalogEntry& entry) {
  Json j = {{"id", entry.id}, {"description", entry.description}, {"F", term_to_json(entry.F)}};
  if (entry.G) j["G"] = term_to_json(*entry.G);
  if (entry.H) j["H"] = term_to_json(*entry.H);
  if (entry.claimedValue) j["claimedValue"] = *entry.claimedValue;
  return j;
}

CatalogEntry entry_from_json(const Json& j) {
  expect_keys(j, "pair", {"id", "description", "F", "G", "H", "claimedValue"});
  CatalogEntry e;
  const Json& id = require(j, "id", "pair");
  if (!id.is_string() || id.get<std::string>().empty()) fail("id", "expected a nonempty string");
  e.id = id.get<std::string>();
  if (auto it = j.find("description"); it != j.end()) {
    if (!it->is_string()) fail("description", "expected a string");
    e.description = it->get<std::string>();
  }
  const bool three = j.contains("H");
  const std::vector<std::string> vars =
      three ? std::vector<std::string>{"n", "k", "a"} : std::vector<std::string>{"n", "k"};
  e.F = term_from_json(require(j, "F", "pair"), "F", vars);
  if (auto it = j.find("G"); it != j.end()) e.G = term_from_json(*it, "G", vars);
  if (auto it = j.find("H"); it != j.end()) e.H = term_from_json(*it, "H", vars);
  if (auto it = j.find("claimedValue"); it != j.end()) {
    if (!it->is_string()) fail("claimedValue", "expected a string");
    e.claimedValue = it->get<std::string>();
  }
  if (three && !e.G) fail("G", "three-variable forms need G and H");
  return e;
}

CatalogEntry entry_from_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& err) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i + 1 < err.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(column) +
                     ": invalid JSON");
  }
  return entry_from_json(j);
}

Json series_to_json(const SeriesSpec& spec) {
  Json summands = Json::array();
  for (const auto& t : spec.summands) summands.push_back(term_to_json(t));
  Json boundary = Json::array();
  for (const auto& b : spec.boundaryTerms) {
    boundary.push_back({{"kind", kind_name(b.kind)},
                        {"parameters", b.parameters},
                        {"claimedLimit", to_canonical_string(b.claimedLimit)}});
  }
  Json provenance = {{"pairId", spec.provenance.pairId},
                     {"s", spec.provenance.s},
                     {"t", spec.provenance.t}};
  if (spec.provenance.r > 0) provenance["r"] = spec.provenance.r;
  return {{"summands", summands},
          {"startIndex", spec.startIndex},
          {"boundaryTerms", boundary},
          {"provenance", provenance}};
}

Json report_to_json(const EvalReport& r) {
  return {{"value", r.value},
          {"digits", r.digits},
          {"termsUsed", r.termsUsed},
          {"tailBound", r.tailBound},
          {"tailBoundLog10", finite_or_null(r.tailBoundLog10)},
          {"digitsPerTerm", r.digitsPerTerm},
          {"wallNotes", r.wallNotes}};
}

Json boundary_to_json(const BoundaryCheckReport& report) {
  Json samples = Json::array();
  for (const auto& s : report.samples) {
    samples.push_back({{"n", s.n}, {"magnitude", s.magnitude}});
  }
  return {{"samples", samples},
          {"monotoneFromIndex",
           report.monotoneFromIndex ? Json(*report.monotoneFromIndex) : Json(nullptr)},
          {"verdict", report.verdict == BoundaryVerdict::VanishesNumerically
                          ? "VanishesNumerically"
                          : "Inconclusive"}};
}

Json residual_to_json(const IdentityResidual& r) {
  return {{"residual", r.magnitude},
          {"log10Residual", finite_or_null(r.log10Magnitude)},
          {"digits", r.digits},
          {"truncation", r.truncation}};
}

Json grid_to_json(const std::vector<GridCell>& grid) {
  Json out = Json::array();
  for (const auto& c : grid) {
    Json cell = {{"s", c.s}, {"t", c.t}};
    if (c.error.empty()) {
      cell["digitsPerTerm"] = *c.digitsPerTerm;
      cell["termsFor100Digits"] = *c.termsFor100Digits;
      cell["value"] = c.value;
    } else {
      cell["error"] = c.error;
    }
    out.push_back(cell);
  }
  return out;
}

std::string report_to_text(const EvalReport& r) {
  std::ostringstream out;
  const auto row = [&out](const char* key, const std::string& value) {
    out << std::left << std::setw(15) << key << value << "\n";
  };
  std::ostringstream dpt;
  dpt << std::fixed << std::setprecision(4) << r.digitsPerTerm;
  row("value", r.value);
  row("digits", std::to_string(r.digits));
  row("termsUsed", std::to_string(r.termsUsed));
  row("tailBound", r.tailBound);
  row("digitsPerTerm", dpt.str());
  row("notes", r.wallNotes);
  return out.str();
}

}  // namespace wzaccel
