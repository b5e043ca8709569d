#include "support.hpp"

namespace support {

using wzaccel::GammaFactor;
using wzaccel::RationalFunction;

namespace {

const std::vector<std::string> kNK{"n", "k"};
const std::vector<std::string> kNKA{"n", "k", "a"};

Polynomial var(const std::vector<std::string>& vars, const char* name) {
  return Polynomial::variable(vars, name);
}

Polynomial cst(const std::vector<std::string>& vars, long c) {
  return Polynomial::constant(vars, c);
}

Integer pow10(long e) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, static_cast<unsigned long>(e));
  return out;
}

Rational pow10q(long e) { return e >= 0 ? Rational(pow10(e)) : Rational(1, pow10(-e)); }

}  // namespace

LinearForm lin(long n, long k, long c, long a, long m) {
  LinearForm f;
  if (n != 0) f.coeffs["n"] = n;
  if (k != 0) f.coeffs["k"] = k;
  if (a != 0) f.coeffs["a"] = a;
  if (m != 0) f.coeffs["m"] = m;
  f.constant = c;
  return f;
}

ProperTerm make_term(const std::vector<std::string>& vars, Rational constant,
                     wzaccel::GeometricMap geometric, const Polynomial& poly,
                     std::vector<GammaFactor> factors) {
  return ProperTerm(vars, constant, std::move(geometric), RationalFunction(poly),
                    std::move(factors));
}

Polynomial poly_nk(long cn, long ck, long c) {
  return var(kNK, "n") * Rational(cn) + var(kNK, "k") * Rational(ck) + cst(kNK, c);
}

ProperTerm zeta3_F() {
  return make_term(kNK, Rational(1, 2), {{"k", -1}}, cst(kNK, 1),
                   {{lin(1, 0, 0), 6},
                    {lin(2, -1, -1), 1},
                    {lin(0, 1, 0), 3},
                    {lin(1, 1, 1), -2},
                    {lin(2, 0, 0), -3}});
}

ProperTerm zeta3_closed_form() {
  const std::vector<std::string> vm{"m"};
  const Polynomial m = var(vm, "m");
  const Polynomial poly = m * m * Rational(205) + m * Rational(250) + cst(vm, 77);
  return make_term(vm, Rational(1, 64), {{"m", -1}}, poly,
                   {{lin(0, 0, 0, 0, 1), 10}, {lin(0, 0, 1, 0, 2), -5}});
}

Rational factorial(long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(out);
}

wzaccel::WZForm potential_pair() {
  // F = -(n+2) n! k! / (n+k+3)!, G = -(k+2) n! k! / (n+k+3)!
  const std::vector<GammaFactor> core{{lin(1, 0, 0), 1}, {lin(0, 1, 0), 1}, {lin(1, 1, 3), -1}};
  return {make_term(kNK, -1, {}, poly_nk(1, 0, 2), core),
          make_term(kNK, -1, {}, poly_nk(0, 1, 2), core), false};
}

Rational potential_phi(long n, long k) {
  return factorial(n) * factorial(k) / factorial(n + k + 2);
}

wzaccel::WZForm skew_potential_pair() {
  const Polynomial n = var(kNK, "n");
  const Polynomial k = var(kNK, "k");
  // (k+1) - (n+2k+3)(n+2k+4)
  const Polynomial pf = -(n * n + n * k * Rational(4) + k * k * Rational(4) + n * Rational(7) +
                          k * Rational(13) + cst(kNK, 11));
  return {make_term(kNK, 1, {}, pf, {{lin(1, 0, 0), 1}, {lin(0, 1, 0), 1}, {lin(1, 2, 4), -1}}),
          make_term(kNK, -2, {}, poly_nk(0, 1, 1),
                    {{lin(1, 0, 0), 1}, {lin(0, 1, 0), 1}, {lin(1, 2, 3), -1}}),
          false};
}

Rational skew_phi(long n, long k) {
  return factorial(n) * factorial(k) / factorial(n + 2 * k + 2);
}

wzaccel::WZForm growth_pair() {
  // F = 2^k (k-n+1) n! k! / (n+k+1)!, G = -k 2^k n! k! / (n+k+1)!
  const std::vector<GammaFactor> core{{lin(1, 0, 0), 1}, {lin(0, 1, 0), 1}, {lin(1, 1, 1), -1}};
  return {make_term(kNK, 1, {{"k", 2}}, poly_nk(-1, 1, 1), core),
          make_term(kNK, -1, {{"k", 2}}, poly_nk(0, 1, 0), core), false};
}

wzaccel::WZForm3 potential_form3() {
  const std::vector<GammaFactor> core{{lin(1, 0, 0), 1},
                                      {lin(0, 1, 0), 1},
                                      {lin(0, 0, 0, 1), 1},
                                      {lin(1, 1, 4, 1), -1}};
  const wzaccel::GeometricMap half{{"n", Rational(1, 2)}, {"k", Rational(1, 2)}, {"a", Rational(1, 2)}};
  const Polynomial n = var(kNKA, "n");
  const Polynomial k = var(kNKA, "k");
  const Polynomial a = var(kNKA, "a");
  const Polynomial seven = cst(kNKA, 7);
  const Rational two = 2;
  return {make_term(kNKA, Rational(-1, 2), half, n * two + k + a * two + seven, core),
          make_term(kNKA, Rational(-1, 2), half, n + k * two + a * two + seven, core),
          make_term(kNKA, Rational(-1, 2), half, n * two + k * two + a + seven, core), false};
}

Rational potential3_phi(long n, long k, long a) {
  return factorial(n) * factorial(k) * factorial(a) / factorial(n + k + a + 3) /
         wzaccel::rational_pow(Rational(2), n + k + a);
}

GridResult grid_wz_check(const ProperTerm& F, const ProperTerm& G, long bound) {
  GridResult out;
  auto at = [](const ProperTerm& t, long n, long k) {
    return wzaccel::eval_exact(t, std::map<std::string, long>{{"n", n}, {"k", k}});
  };
  for (long n = 0; n <= bound; ++n) {
    for (long k = 0; k <= bound; ++k) {
      const auto f1 = at(F, n + 1, k);
      const auto f0 = at(F, n, k);
      const auto g1 = at(G, n, k + 1);
      const auto g0 = at(G, n, k);
      if (f1.is_undefined() || f0.is_undefined() || g1.is_undefined() || g0.is_undefined()) {
        continue;
      }
      ++out.checked;
      if (f1.numeric() - f0.numeric() != g1.numeric() - g0.numeric()) out.holds = false;
    }
  }
  return out;
}

Rational zeta3_euler_maclaurin(long N) {
  Rational sum = 0;
  for (long n = 1; n <= N; ++n) sum += Rational(Integer(1), Integer(Integer(n) * n * n));
  const Rational x = N;
  auto p = [&x](int e) -> Rational { return Rational(1) / wzaccel::rational_pow(x, e); };
  sum += Rational(1, 2) * p(2) - Rational(1, 2) * p(3) + Rational(1, 4) * p(4) -
         Rational(1, 12) * p(6) + Rational(1, 12) * p(8) - Rational(3, 20) * p(10) +
         Rational(5, 12) * p(12);
  return sum;
}

std::string round_decimal(const Rational& x, long digits) {
  const Rational ax = abs(x);
  // e with 10^(e-1) <= |x| < 10^e
  long e = static_cast<long>(mpz_sizeinbase(ax.get_num_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(ax.get_den_mpz_t(), 10));
  while (ax >= pow10q(e)) ++e;
  while (ax < pow10q(e - 1)) --e;
  Rational scaled = ax * pow10q(digits - e) + Rational(1, 2);
  Integer r = scaled.get_num() / scaled.get_den();
  if (r == pow10(digits)) {
    r /= 10;
    ++e;
  }
  const std::string s = r.get_str();
  const std::string sign = x < 0 ? "-" : "";
  const std::string frac = s.size() > 1 ? "." + s.substr(1) : "";
  if (e == 1) return sign + s.substr(0, 1) + frac;
  if (e == 0) return sign + "0." + s;
  return sign + s.substr(0, 1) + frac + "e" + std::to_string(e - 1);
}

}  // namespace support
