#include "wzaccel/eval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <future>
#include <limits>
#include <map>
#include <sstream>

#include "wzaccel/bigfloat.hpp"
#include "wzaccel/errors.hpp"

namespace wzaccel {

namespace {

constexpr mpfr_prec_t kLowBits = 128;
constexpr double kInf = std::numeric_limits<double>::infinity();

using IntPoly = std::vector<Integer>;  // lowest degree first

Integer eval_poly(const IntPoly& p, long m) {
  Integer acc = 0;
  const Integer x = m;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<Rational> univariate_coeffs(const Polynomial& p) {
  std::vector<Rational> out;
  if (p.variables().empty()) {
    out.push_back(p.constant_term());
    return out;
  }
  for (const auto& c : p.coefficients_in(0)) out.push_back(c.constant_term());
  return out;
}

// floor(1 + max |c_i / c_d|) + 1 bounds the integer roots of p.
long root_bound(const Polynomial& p) {
  const auto c = univariate_coeffs(p);
  if (c.size() <= 1) return 0;
  Rational best = 0;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    best = std::max(best, Rational(abs(c[i]) / abs(c.back())));
  }
  best += 2;
  return mpz_class(best.get_num() / best.get_den()).get_si();
}

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long ceil_div(long a, long b) { return -floor_div(-a, b); }

// One summand of a series, split into an irregular head evaluated exactly
// and a regular tail driven by the exact shift ratio p(m)/q(m).
struct Summand {
  ProperTerm term;
  long regularFrom = 0;
  bool dead = false;  // identically Zero from regularFrom on
  std::map<long, Rational> head;
  Rational anchor;
  IntPoly p;
  IntPoly q;
  double limit = 0;
  bool divergent = false;

  Rational ratio(long m) const {
    const Integer den = eval_poly(q, m);
    if (den == 0) throw std::logic_error("eval: pole of the shift ratio in the regular range");
    return Rational(eval_poly(p, m), den);
  }
};

Summand make_summand(const ProperTerm& term, long start) {
  if (term.variables().size() != 1 || term.variables().front() != "m") {
    throw InvalidArgument("series summands must be univariate in m");
  }
  Summand s;
  s.term = term;
  if (term.is_zero()) {
    s.dead = true;
    s.regularFrom = start;
    return s;
  }
  const long never = std::numeric_limits<long>::max();
  long regular = start;
  long zero_from = never;
  long undefined_from = never;
  for (const auto& f : term.factors()) {
    const long c = f.form.coefficient("m");
    const long d = f.form.constant;
    long negative_from = never;
    if (c > 0) {
      regular = std::max(regular, ceil_div(-d, c));
    } else if (c < 0) {
      negative_from = floor_div(d, -c) + 1;
    } else if (d < 0) {
      negative_from = std::numeric_limits<long>::min();
    }
    if (negative_from == never) continue;
    if (f.exponent < 0) {
      zero_from = std::min(zero_from, negative_from);
    } else {
      undefined_from = std::min(undefined_from, negative_from);
    }
  }
  if (zero_from != never) {
    s.dead = true;
    regular = std::max(start, zero_from);
  } else if (undefined_from != never) {
    throw UndefinedTerm("summand " + term.to_string() + " is undefined for all m >= " +
                        std::to_string(std::max(start, undefined_from)));
  } else {
    regular = std::max({regular, root_bound(term.prefactor().numerator()),
                        root_bound(term.prefactor().denominator())});
  }
  s.regularFrom = regular;

  for (long m = start; m < regular; ++m) {
    const TermValue v = eval_exact(term, std::span<const long>(&m, 1));
    if (v.is_undefined()) {
      throw UndefinedTerm("summand " + term.to_string() + " is undefined at m = " +
                          std::to_string(m));
    }
    if (v.is_finite() && v.value != 0) s.head[m] = v.value;
  }
  if (s.dead) return s;

  const TermValue a = eval_exact(term, std::span<const long>(&regular, 1));
  if (!a.is_finite() || a.value == 0) {
    throw std::logic_error("eval: summand vanishes in its regular range");
  }
  s.anchor = a.value;

  const RationalFunction r = shift_ratio(term, "m");
  const auto num = univariate_coeffs(r.numerator());
  const auto den = univariate_coeffs(r.denominator());
  Integer scale = 1;
  for (const auto& c : num) scale = lcm(scale, Integer(c.get_den()));
  for (const auto& c : den) scale = lcm(scale, Integer(c.get_den()));
  for (const auto& c : num) s.p.push_back(Integer(c * scale));
  for (const auto& c : den) s.q.push_back(Integer(c * scale));
  while (s.p.size() > 1 && s.p.back() == 0) s.p.pop_back();
  while (s.q.size() > 1 && s.q.back() == 0) s.q.pop_back();
  if (s.p.size() > s.q.size()) {
    s.divergent = true;
  } else if (s.p.size() < s.q.size()) {
    s.limit = 0;
  } else {
    s.limit = Rational(s.p.back(), s.q.back()).get_d();
    s.divergent = std::fabs(s.limit) >= 1;
  }
  return s;
}

// Outcome of the low-precision certification pass.
struct Plan {
  long terms = 0;
  BigFloat tail{kLowBits};
  BigFloat approx{kLowBits};
  double digitsPerTerm = 0;
};

// Tail bound of one regular summand after including index `last`; nullopt if
// the ratio test cannot certify it yet.
std::optional<BigFloat> summand_tail(const Summand& s, long last, const BigFloat& a_last) {
  double r[5];
  for (int i = 0; i < 5; ++i) r[i] = s.ratio(last + i).get_d();
  const bool alternating =
      s.limit <= 0 && s.limit > -1 && std::all_of(r, r + 5, [](double x) { return x < 0 && x > -1; });
  BigFloat out = a_last.abs();
  if (alternating) {
    out *= s.ratio(last);
    return out.abs();
  }
  double rho0 = std::fabs(s.limit);
  for (double x : r) rho0 = std::max(rho0, std::fabs(x));
  if (rho0 >= 1) return std::nullopt;
  const double rho = std::min(1.05 * rho0, (1 + rho0) / 2);
  // rho / (1 - rho), rounded up slightly
  out *= Rational(rho / (1 - rho) * 1.01);
  return out;
}

Plan certify(const std::vector<Summand>& ss, long start, double target_log10, long budget) {
  Plan plan;
  std::vector<BigFloat> cur(ss.size(), BigFloat(kLowBits));
  std::vector<double> total_log;
  for (long last = start;; ++last) {
    if (last - start + 1 > budget) {
      throw NoConvergenceDetected("tail not certified within the term budget of " +
                                  std::to_string(budget) + " terms");
    }
    BigFloat total(kLowBits);
    for (std::size_t j = 0; j < ss.size(); ++j) {
      const Summand& s = ss[j];
      if (last < s.regularFrom) {
        auto it = s.head.find(last);
        cur[j] = BigFloat(it == s.head.end() ? Rational(0) : it->second, kLowBits);
      } else if (s.dead) {
        cur[j] = BigFloat(kLowBits);
      } else if (last == s.regularFrom) {
        cur[j] = BigFloat(s.anchor, kLowBits);
      } else {
        cur[j] *= s.ratio(last - 1);
      }
      total += cur[j];
    }
    plan.approx += total;
    total_log.push_back(total.log10_abs());

    BigFloat tail(kLowBits);
    bool certified = true;
    for (std::size_t j = 0; j < ss.size() && certified; ++j) {
      const Summand& s = ss[j];
      if (s.dead) {
        certified = s.head.empty() || s.head.rbegin()->first <= last;
        continue;
      }
      if (last < s.regularFrom) {
        certified = false;
        continue;
      }
      auto t = summand_tail(s, last, cur[j]);
      if (!t) {
        certified = false;
      } else {
        tail += *t;
      }
    }
    if (certified && (tail.is_zero() || tail.log10_abs() < target_log10)) {
      plan.terms = last - start + 1;
      plan.tail = tail;
      break;
    }
  }

  // -log10 of the geometric mean of the last total-term ratios
  const long n = static_cast<long>(total_log.size());
  long w = std::min<long>(10, n - 1);
  while (w > 0 && !(std::isfinite(total_log[n - 1]) && std::isfinite(total_log[n - 1 - w]))) --w;
  if (w > 0) {
    plan.digitsPerTerm = (total_log[n - 1 - w] - total_log[n - 1]) / static_cast<double>(w);
  } else {
    double lim = 0;
    for (const auto& s : ss) {
      if (!s.dead) lim = std::max(lim, std::fabs(s.limit));
    }
    plan.digitsPerTerm = lim > 0 ? -std::log10(lim) : 0;
  }
  return plan;
}

struct Split {
  Integer P, Q, T;
};

Split split(const Summand& s, long a, long b) {
  if (b - a == 1) {
    Integer q = eval_poly(s.q, a);
    if (q == 0) throw std::logic_error("eval: pole of the shift ratio in the regular range");
    return {eval_poly(s.p, a), q, q};
  }
  const long mid = a + (b - a) / 2;
  Split l = split(s, a, mid);
  Split r = split(s, mid, b);
  return {l.P * r.P, l.Q * r.Q, l.T * r.Q + l.P * r.T};
}

BigFloat sum_loop(const std::vector<Summand>& ss, long start, long end, mpfr_prec_t bits) {
  BigFloat sum(bits);
  std::vector<BigFloat> cur(ss.size(), BigFloat(bits));
  for (long m = start; m < end; ++m) {
    for (std::size_t j = 0; j < ss.size(); ++j) {
      const Summand& s = ss[j];
      if (m < s.regularFrom) {
        auto it = s.head.find(m);
        if (it != s.head.end()) sum += BigFloat(it->second, bits);
        continue;
      }
      if (s.dead) continue;
      if (m == s.regularFrom) {
        cur[j] = BigFloat(s.anchor, bits);
      } else {
        cur[j] *= eval_poly(s.p, m - 1);
        cur[j] /= eval_poly(s.q, m - 1);
      }
      sum += cur[j];
    }
  }
  return sum;
}

BigFloat sum_split(const std::vector<Summand>& ss, long start, long end, mpfr_prec_t bits) {
  Rational head = 0;
  for (const auto& s : ss) {
    for (const auto& [m, v] : s.head) {
      if (m >= start && m < end) head += v;
    }
  }
  BigFloat sum(head, bits);
  for (const auto& s : ss) {
    if (s.dead || s.regularFrom >= end) continue;
    const Split r = split(s, s.regularFrom, end);
    BigFloat part(bits);
    mpfr_set_z(part.get(), r.T.get_mpz_t(), MPFR_RNDN);
    part /= r.Q;
    part *= s.anchor;
    sum += part;
  }
  return sum;
}

std::string short_decimal(const BigFloat& x) {
  if (x.is_zero()) return "0";
  return x.to_decimal(3);
}

}  // namespace

long default_term_budget() {
  if (const char* env = std::getenv("WZACCEL_TERM_BUDGET")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 10000;
}

EvalReport eval_series(const SeriesSpec& spec, long digits, const EvalOptions& options) {
  if (digits < 1) throw InvalidArgument("digits must be a positive integer");
  const long budget = options.termBudget > 0 ? options.termBudget : default_term_budget();
  const long start = spec.startIndex;

  std::vector<Summand> ss;
  for (const auto& t : spec.summands) ss.push_back(make_summand(t, start));
  for (const auto& s : ss) {
    if (!s.dead && s.divergent) {
      throw NoConvergenceDetected("ratio test fails for summand " + s.term.to_string() +
                                  " (limit ratio >= 1)");
    }
  }

  Rational claimed = 0;
  for (const auto& b : spec.boundaryTerms) claimed += b.claimedLimit;

  double target = -static_cast<double>(digits) - 2;
  Plan plan = certify(ss, start, target, budget);
  long extra = 0;
  {
    BigFloat approx = plan.approx;
    approx += BigFloat(Rational(-claimed), kLowBits);
    const double lg = approx.log10_abs();
    if (std::isfinite(lg) && lg < -1) {
      // Small values need an absolute target scaled by their magnitude.
      extra = static_cast<long>(-std::floor(lg)) - 1;
      extra = std::min(extra, digits + 50);
      target -= static_cast<double>(extra);
      plan = certify(ss, start, target, budget);
    }
  }

  const long end = start + plan.terms;
  const long working = digits + 10 + extra +
                       static_cast<long>(std::ceil(std::log10(static_cast<double>(plan.terms + 1))));
  const mpfr_prec_t bits = bits_for_digits(working);
  BigFloat value = options.method == SumMethod::Loop ? sum_loop(ss, start, end, bits)
                                                     : sum_split(ss, start, end, bits);
  if (claimed != 0) value += BigFloat(Rational(-claimed), bits);

  EvalReport report;
  report.value = value.to_decimal(digits);
  report.digits = digits;
  report.termsUsed = plan.terms;
  report.tailBound = short_decimal(plan.tail);
  report.tailBoundLog10 = plan.tail.is_zero() ? -kInf : plan.tail.log10_abs();
  report.digitsPerTerm = plan.digitsPerTerm;
  std::ostringstream notes;
  notes << "method=" << (options.method == SumMethod::Loop ? "loop" : "split")
        << " workingDigits=" << working << " summands=" << ss.size();
  report.wallNotes = notes.str();
  return report;
}

EvalReport eval_series(const ProperTerm& term, long digits, const EvalOptions& options) {
  SeriesSpec spec;
  spec.summands.push_back(term);
  return eval_series(spec, digits, options);
}

BoundaryCheckReport check_boundary_vanishing(const WZForm& pair, long s, long t, long nMax) {
  if (s < 1 || t < 1) throw InvalidArgument("s and t must be positive integers");
  if (nMax < 1) throw InvalidArgument("nMax must be at least 1");
  BoundaryCheckReport report;
  const mpfr_prec_t bits = bits_for_digits(30);
  for (long n = 1; n <= nMax; ++n) {
    Rational row = 0;
    for (long k = 0; k < n; ++k) {
      for (long j = 0; j < t; ++j) {
        const std::map<std::string, long> point{{"n", s * n}, {"k", t * k + j}};
        const TermValue v = eval_exact(pair.F, point);
        if (v.is_undefined()) {
          throw UndefinedTerm("F is undefined at (n,k) = (" + std::to_string(s * n) + "," +
                              std::to_string(t * k + j) + ")");
        }
        row += v.numeric();
      }
    }
    const BigFloat mag(abs(row), bits);
    report.samples.push_back({n, mag.is_zero() ? "0" : mag.to_decimal(6), mag.log10_abs()});
  }

  const auto& smp = report.samples;
  if (!smp.empty()) {
    std::size_t from = smp.size() - 1;
    while (from > 0 && smp[from - 1].log10Magnitude > smp[from].log10Magnitude) --from;
    if (smp.size() - from >= 3) {
      report.monotoneFromIndex = smp[from].n;
      if (smp.back().log10Magnitude < -10) {
        report.verdict = BoundaryVerdict::VanishesNumerically;
      }
    }
  }
  return report;
}

IdentityResidual verify_identity_numeric(const IdentitySpec& spec, long digits, long truncation) {
  if (digits < 1) throw InvalidArgument("digits must be a positive integer");
  if (truncation < 0) throw InvalidArgument("truncation must be nonnegative");
  auto value = [](const ProperTerm& term, long n, long k) {
    const TermValue v = eval_exact(term, std::map<std::string, long>{{"n", n}, {"k", k}});
    if (v.is_undefined()) {
      throw UndefinedTerm("term is undefined at (n,k) = (" + std::to_string(n) + "," +
                          std::to_string(k) + ")");
    }
    return v.numeric();
  };
  const long T = truncation;
  Rational lhs = 0;
  Rational rhs = 0;
  for (long i = 0; i <= T; ++i) {
    lhs += value(spec.F, 0, i) - value(spec.F, T, i);
    rhs += value(spec.G, i, 0) - value(spec.G, i, T);
  }
  IdentityResidual out;
  out.exact = lhs - rhs;
  const BigFloat mag(abs(out.exact), bits_for_digits(digits));
  out.magnitude = mag.is_zero() ? "0" : mag.to_decimal(digits);
  out.log10Magnitude = mag.log10_abs();
  out.digits = digits;
  out.truncation = truncation;
  return out;
}

std::vector<GridCell> convergence_grid(const WZForm& pair, std::span<const long> sRange,
                                       std::span<const long> tRange, long digits) {
  std::vector<std::future<GridCell>> jobs;
  for (long s : sRange) {
    for (long t : tRange) {
      jobs.push_back(std::async(std::launch::async, [&pair, s, t, digits] {
        GridCell cell;
        cell.s = s;
        cell.t = t;
        try {
          const SeriesSpec spec = series_formula3(pair, s, t);
          const EvalReport r = eval_series(spec, digits);
          cell.value = r.value;
          cell.digitsPerTerm = r.digitsPerTerm;
          cell.termsFor100Digits = digits == 100 ? r.termsUsed : eval_series(spec, 100).termsUsed;
        } catch (const std::exception& e) {
          cell.error = e.what();
        }
        return cell;
      }));
    }
  }
  std::vector<GridCell> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

}  // namespace wzaccel
