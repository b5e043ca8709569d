#include <doctest.h>

#include <random>

#include "wzaccel/errors.hpp"
#include "wzaccel/linear_solve.hpp"

using namespace wzaccel;

namespace {

const std::vector<std::string> kNK{"n", "k"};

Polynomial n_() { return Polynomial::variable(kNK, "n"); }
Polynomial k_() { return Polynomial::variable(kNK, "k"); }
Polynomial c_(long c) { return Polynomial::constant(kNK, c); }

Polynomial random_poly(std::mt19937& rng, int max_degree) {
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::uniform_int_distribution<int> deg(0, max_degree);
  Polynomial p(kNK);
  const int terms = deg(rng) + 1;
  for (int t = 0; t < terms; ++t) {
    const int dn = deg(rng);
    const int dk = std::uniform_int_distribution<int>(0, max_degree - dn)(rng);
    p.add_term({dn, dk}, coeff(rng));
  }
  return p;
}

}  // namespace

TEST_CASE("canonical rational strings") {
  CHECK(parse_canonical_rational("-3/4") == Rational(-3, 4));
  CHECK(parse_canonical_rational("7") == 7);
  CHECK(parse_canonical_rational("0") == 0);
  CHECK_THROWS_AS(parse_canonical_rational("2/4"), ParseError);
  CHECK_THROWS_AS(parse_canonical_rational("3/1"), ParseError);
  CHECK_THROWS_AS(parse_canonical_rational("+1"), ParseError);
  CHECK_THROWS_AS(parse_canonical_rational("-0"), ParseError);
  CHECK_THROWS_AS(parse_canonical_rational("1/-2"), ParseError);
  CHECK_THROWS_AS(parse_canonical_rational(""), ParseError);
  CHECK(to_canonical_string(Rational(6, -4)) == "-3/2");
}

TEST_CASE("polynomial arithmetic and printing") {
  const Polynomial p = (n_() + c_(1)) * (n_() - k_());
  CHECK(p.to_string() == "n^2 - n*k + n - k");
  CHECK(p.total_degree() == 2);
  CHECK(p.degree(1) == 1);
  const Rational at[] = {3, 5};
  CHECK(p.evaluate(at) == Rational(4 * (3 - 5)));
  CHECK(p.shift(0, 1) == (n_() + c_(2)) * (n_() + c_(1) - k_()));
  CHECK_THROWS_AS(p + Polynomial::variable({"m"}, "m"), VariableMismatch);
}

TEST_CASE("exact division and gcd") {
  const Polynomial a = (n_() + k_()) * (c_(2) * n_() - k_() + c_(1));
  auto q = divide_exact(a, n_() + k_());
  REQUIRE(q);
  CHECK(*q == c_(2) * n_() - k_() + c_(1));
  CHECK_FALSE(divide_exact(a, n_() + c_(7)));

  const Polynomial g = gcd(a * (n_() - c_(3)), a * (k_() + c_(4)) * Rational(6));
  CHECK(g == a.primitive_part());
}

TEST_CASE("ratfunc_normalize examples") {
  const RationalFunction r = ratfunc_normalize(c_(2) * n_() * n_(), c_(4) * n_());
  CHECK(r.numerator() == n_() * Rational(1, 2));
  CHECK(r.denominator() == c_(1));
  CHECK(ratfunc_normalize(n_() - k_(), n_() - k_()) == RationalFunction::constant(kNK, 1));
  CHECK_THROWS_AS(ratfunc_normalize(n_(), Polynomial(kNK)), ZeroDenominator);
  // Denominator leading coefficient is made positive.
  const RationalFunction s = ratfunc_normalize(n_(), -n_() - c_(1));
  CHECK(s.denominator().leading_coefficient() > 0);
}

TEST_CASE("ratfunc_equal examples") {
  CHECK(ratfunc_equal(RationalFunction(n_() * Rational(1, 2)),
                      ratfunc_normalize(c_(2) * n_(), c_(4))));
  CHECK_FALSE(ratfunc_equal(RationalFunction(n_()), RationalFunction(k_())));
  CHECK_THROWS_AS(ratfunc_equal(RationalFunction(n_()),
                                RationalFunction(Polynomial::variable({"m"}, "m"))),
                  VariableMismatch);
}

TEST_CASE("normalize cancels a common factor (property)") {
  std::mt19937 rng(20240917);
  for (int trial = 0; trial < 40; ++trial) {
    const Polynomial a = random_poly(rng, 3);
    Polynomial b = random_poly(rng, 3);
    Polynomial c = random_poly(rng, 3);
    if (b.is_zero() || c.is_zero()) continue;
    CHECK(ratfunc_equal(ratfunc_normalize(a * c, b * c), ratfunc_normalize(a, b)));
    CHECK(ratfunc_normalize(a * c, b * c) == ratfunc_normalize(a, b));
  }
}

TEST_CASE("field operations agree with point evaluation (property)") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coord(-12, 12);
  for (int trial = 0; trial < 15; ++trial) {
    const Polynomial a = random_poly(rng, 2);
    const Polynomial b = random_poly(rng, 2);
    const Polynomial c = random_poly(rng, 2);
    const Polynomial d = random_poly(rng, 2);
    if (b.is_zero() || d.is_zero()) continue;
    const RationalFunction x(a, b);
    const RationalFunction y(c, d);
    const RationalFunction sum = x + y;
    const RationalFunction prod = x * y;
    int checked = 0;
    while (checked < 20) {
      const Rational pt[] = {coord(rng), coord(rng)};
      const auto xv = x.evaluate(pt);
      const auto yv = y.evaluate(pt);
      const auto sv = sum.evaluate(pt);
      const auto pv = prod.evaluate(pt);
      if (!xv || !yv || !sv || !pv) continue;
      CHECK(*sv == *xv + *yv);
      CHECK(*pv == *xv * *yv);
      ++checked;
    }
  }
}

TEST_CASE("solve_linear examples") {
  auto unique = solve_linear({{1, 0}, {0, 1}}, {3, 4});
  CHECK(unique.status == SolveStatus::Unique);
  CHECK(unique.x == std::vector<Rational>{3, 4});

  auto under = solve_linear({{1, 1}}, {2});
  CHECK(under.status == SolveStatus::UnderDetermined);
  CHECK(under.x == std::vector<Rational>{2, 0});

  auto none = solve_linear({{1, 1}, {2, 2}}, {1, 3});
  CHECK(none.status == SolveStatus::NoSolution);
}

TEST_CASE("solve_linear solutions satisfy the system (property)") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (int trial = 0; trial < 30; ++trial) {
    const int rows = 1 + trial % 4;
    const int cols = 1 + (trial / 4) % 4;
    std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols));
    std::vector<Rational> rhs(rows);
    for (auto& row : m) {
      for (auto& v : row) v = coeff(rng);
    }
    for (auto& v : rhs) v = coeff(rng);
    const auto sol = solve_linear(m, rhs);
    if (sol.status == SolveStatus::NoSolution) continue;
    for (int i = 0; i < rows; ++i) {
      Rational acc = 0;
      for (int j = 0; j < cols; ++j) acc += m[i][j] * sol.x[j];
      CHECK(acc == rhs[i]);
    }
  }
}

TEST_CASE("solve_linear over polynomials") {
  // [[n, 1], [1, -1]] x = [n + 1, 0]  =>  x = ((n+1)/(n+1), ...) = (1, 1)
  const auto sol = solve_linear({{n_(), c_(1)}, {c_(1), c_(-1)}}, {n_() + c_(1), c_(0)});
  REQUIRE(sol.status == SolveStatus::Unique);
  CHECK(sol.x[0] == RationalFunction::constant(kNK, 1));
  CHECK(sol.x[1] == RationalFunction::constant(kNK, 1));
}
