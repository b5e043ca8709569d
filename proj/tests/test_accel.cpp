#include <doctest.h>

#include "support.hpp"
#include "wzaccel/errors.hpp"

using namespace wzaccel;

namespace {

const WZForm& zeta3_pair() {
  static const WZForm pair = WZForm::certified(support::zeta3_F(), find_companion(support::zeta3_F()));
  return pair;
}

const WZForm& pot_pair() {
  static const WZForm pair =
      WZForm::certified(support::potential_pair().F, support::potential_pair().G);
  return pair;
}

Rational value_at(const ProperTerm& t, long m) {
  return eval_exact(t, std::span<const long>(&m, 1)).numeric();
}

TermValue at2(const ProperTerm& t, long n, long k) {
  return eval_exact(t, std::map<std::string, long>{{"n", n}, {"k", k}});
}

}  // namespace

TEST_CASE("build_omega_s examples") {
  const WZForm w1 = build_omega_s(zeta3_pair(), 1);
  CHECK(w1.F == zeta3_pair().F);
  CHECK(w1.G == zeta3_pair().G);

  const WZForm w2 = build_omega_s(zeta3_pair(), 2);
  CHECK(w2.verified);
  for (long n = 1; n <= 3; ++n) {
    for (long k = 0; k <= 3; ++k) {
      const auto a = at2(w2.F, n, k);
      const auto b = at2(zeta3_pair().F, 2 * n, k);
      CHECK(a.tag == b.tag);
      CHECK(a.value == b.value);
    }
  }
  CHECK(build_omega_s(zeta3_pair(), 3).verified);
  CHECK_THROWS_AS(build_omega_s(zeta3_pair(), 0), InvalidArgument);
}

TEST_CASE("build_omega_st examples") {
  const WZForm w11 = build_omega_st(zeta3_pair(), 1, 1);
  CHECK(w11.F == zeta3_pair().F);
  CHECK(build_omega_st(zeta3_pair(), 2, 2).verified);
  CHECK(build_omega_st(zeta3_pair(), 1, 3).verified);
  CHECK_THROWS_AS(build_omega_st(zeta3_pair(), 1, 0), InvalidArgument);
}

TEST_CASE("reparametrized potential forms stay closed (property)") {
  for (long s = 1; s <= 4; ++s) CHECK(build_omega_s(pot_pair(), s).verified);
  for (long s = 1; s <= 3; ++s) {
    for (long t = 1; t <= 3; ++t) {
      const WZForm w = build_omega_st(pot_pair(), s, t);
      CHECK(w.verified);
      CHECK(support::grid_wz_check(w.F, w.G, 5).holds);
    }
  }
}

TEST_CASE("series_formula1 examples") {
  const SeriesSpec s1 = series_formula1(zeta3_pair(), 1, "zeta3-paper");
  REQUIRE(s1.summands.size() == 2);
  for (long m = 0; m <= 5; ++m) {
    CHECK(value_at(s1.summands[0], m) == at2(zeta3_pair().F, m + 1, m).numeric());
    CHECK(value_at(s1.summands[1], m) == at2(zeta3_pair().G, m, m).numeric());
  }
  CHECK(s1.startIndex == 0);
  REQUIRE(s1.boundaryTerms.size() == 1);
  CHECK(s1.boundaryTerms[0].kind == BoundaryKind::RowSumOfF);
  CHECK(s1.boundaryTerms[0].claimedLimit == 0);
  CHECK(s1.provenance.pairId == "zeta3-paper");

  CHECK(series_formula1(zeta3_pair(), 2).summands.size() == 3);
  CHECK(combine_to_closed_form(s1) == support::zeta3_closed_form());
}

TEST_CASE("series_formula3 examples") {
  for (long s = 1; s <= 3; ++s) {
    CHECK(series_formula3(zeta3_pair(), s, 1) == series_formula1(zeta3_pair(), s));
  }
  const SeriesSpec s12 = series_formula3(zeta3_pair(), 1, 2);
  CHECK(s12.summands.size() == 3);
  const ProperTerm closed = combine_to_closed_form(s12);
  for (long m = 0; m <= 10; ++m) {
    Rational total = 0;
    for (const auto& t : s12.summands) total += value_at(t, m);
    CHECK(value_at(closed, m) == total);
  }
}

TEST_CASE("combine_to_closed_form matches summand totals (property)") {
  for (long s = 1; s <= 3; ++s) {
    for (long t = 1; t <= 2; ++t) {
      const SeriesSpec spec = series_formula3(zeta3_pair(), s, t);
      const ProperTerm closed = combine_to_closed_form(spec);
      for (long m = 0; m <= 10; ++m) {
        Rational total = 0;
        for (const auto& term : spec.summands) total += value_at(term, m);
        CHECK(value_at(closed, m) == total);
      }
    }
  }
  SeriesSpec single;
  single.summands.push_back(support::zeta3_closed_form());
  CHECK(combine_to_closed_form(single) == support::zeta3_closed_form());
}

TEST_CASE("identity_formula2 applicability") {
  CHECK_THROWS_AS(identity_formula2(zeta3_pair()), Inapplicable);
  const IdentitySpec id = identity_formula2(pot_pair());
  CHECK(id.F == pot_pair().F);
}

TEST_CASE("series_formula4 structure") {
  const WZForm3 form = WZForm3::certified(support::potential_form3().F, support::potential_form3().G,
                                          support::potential_form3().H);
  for (long s = 1; s <= 2; ++s) {
    for (long t = 1; t <= 2; ++t) {
      for (long r = 1; r <= 2; ++r) {
        const SeriesSpec spec = series_formula4(form, s, t, r);
        CHECK(spec.summands.size() == static_cast<std::size_t>(s + t + r));
        CHECK(spec.boundaryTerms.size() == 2);
      }
    }
  }
  // Summands at (1,1,1) telescope to phi(m+1,m+1,m+1) - phi(m,m,m).
  const SeriesSpec spec = series_formula4(form, 1, 1, 1);
  for (long m = 0; m <= 6; ++m) {
    Rational total = 0;
    for (const auto& t : spec.summands) total += value_at(t, m);
    CHECK(total == support::potential3_phi(m + 1, m + 1, m + 1) - support::potential3_phi(m, m, m));
  }
  CHECK_THROWS_AS(series_formula4(form, 1, 1, 0), InvalidArgument);
}

TEST_CASE("series_formula4 on an embedded two-variable pair") {
  const std::vector<std::string> nka{"n", "k", "a"};
  const Substitution keep{{"n", LinearForm::variable("n")}, {"k", LinearForm::variable("k")}};
  const WZForm3 form = WZForm3::certified(substitute_affine(pot_pair().F, nka, keep),
                                          substitute_affine(pot_pair().G, nka, keep),
                                          ProperTerm::zero(nka));
  for (long s = 1; s <= 2; ++s) {
    for (long t = 1; t <= 2; ++t) {
      const SeriesSpec s4 = series_formula4(form, s, t, 1);
      const SeriesSpec s3 = series_formula3(pot_pair(), s, t);
      for (long m = 0; m <= 6; ++m) {
        Rational a = 0;
        Rational b = 0;
        for (const auto& x : s4.summands) a += value_at(x, m);
        for (const auto& x : s3.summands) b += value_at(x, m);
        CHECK(a == b);
      }
    }
  }
}
