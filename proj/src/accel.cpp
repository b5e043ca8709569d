#include "wzaccel/accel.hpp"

#include "wzaccel/errors.hpp"

namespace wzaccel {

namespace {

const std::vector<std::string> kNK{"n", "k"};
const std::vector<std::string> kM{"m"};

void require_positive(long value, const char* name) {
  if (value < 1) {
    throw InvalidArgument(std::string(name) + " must be a positive integer");
  }
}

LinearForm form(const std::string& var, long coeff, long constant) {
  return LinearForm::variable(var, coeff, constant);
}

ProperTerm combine_or_throw(const std::vector<ProperTerm>& terms) {
  auto out = combine_similar(terms);
  if (!out) throw std::logic_error("substituted components are not similar");
  return *std::move(out);
}

void push_nonzero(std::vector<ProperTerm>& out, ProperTerm term) {
  if (!term.is_zero()) out.push_back(std::move(term));
}

}  // namespace

WZForm build_omega_s(const WZForm& pair, long s) { return build_omega_st(pair, s, 1); }

WZForm build_omega_st(const WZForm& pair, long s, long t) {
  require_positive(s, "s");
  require_positive(t, "t");
  std::vector<ProperTerm> fs;
  for (long j = 0; j < t; ++j) {
    fs.push_back(substitute_affine(pair.F, kNK, {{"n", form("n", s, 0)}, {"k", form("k", t, j)}}));
  }
  std::vector<ProperTerm> gs;
  for (long i = 0; i < s; ++i) {
    gs.push_back(substitute_affine(pair.G, kNK, {{"n", form("n", s, i)}, {"k", form("k", t, 0)}}));
  }
  return WZForm::certified(combine_or_throw(fs), combine_or_throw(gs));
}

SeriesSpec series_formula1(const WZForm& pair, long s, const std::string& pairId) {
  return series_formula3(pair, s, 1, pairId);
}

SeriesSpec series_formula3(const WZForm& pair, long s, long t, const std::string& pairId) {
  require_positive(s, "s");
  require_positive(t, "t");
  SeriesSpec spec;
  for (long j = 0; j < t; ++j) {
    push_nonzero(spec.summands,
                 substitute_affine(pair.F, kM, {{"n", form("m", s, s)}, {"k", form("m", t, j)}}));
  }
  for (long i = 0; i < s; ++i) {
    push_nonzero(spec.summands,
                 substitute_affine(pair.G, kM, {{"n", form("m", s, i)}, {"k", form("m", t, 0)}}));
  }
  spec.boundaryTerms.push_back({BoundaryKind::RowSumOfF, {s, t}, 0});
  spec.provenance = {pairId, s, t, 0};
  return spec;
}

SeriesSpec lhs_series(const WZForm& pair, const std::string& pairId) {
  SeriesSpec spec;
  push_nonzero(spec.summands,
               substitute_affine(pair.G, kM, {{"n", form("m", 1, 0)}, {"k", form("m", 0, 0)}}));
  spec.provenance = {pairId, 0, 0, 0};
  return spec;
}

IdentitySpec identity_formula2(const WZForm& pair) {
  auto all_undefined = [](const ProperTerm& term, bool vary_k) {
    for (long i = 0; i <= 4; ++i) {
      const std::map<std::string, long> point{{"n", vary_k ? 0 : i}, {"k", vary_k ? i : 0}};
      if (!eval_exact(term, point).is_undefined()) return false;
    }
    return true;
  };
  if (all_undefined(pair.F, true)) {
    throw Inapplicable("F(0,k) is undefined for k = 0..4");
  }
  if (all_undefined(pair.G, false)) {
    throw Inapplicable("G(n,0) is undefined for n = 0..4");
  }
  return IdentitySpec{pair.F,
                      pair.G,
                      {"sum_{k>=0} F(0,k)", "lim_n sum_{k=0}^{n} F(n,k)",
                       "sum_{n>=0} G(n,0)", "lim_k sum_{n=0}^{k} G(n,k)"}};
}

SeriesSpec series_formula4(const WZForm3& form3, long s, long t, long r,
                           const std::string& pairId) {
  require_positive(s, "s");
  require_positive(t, "t");
  require_positive(r, "r");
  SeriesSpec spec;
  for (long u = 0; u < r; ++u) {
    push_nonzero(spec.summands,
                 substitute_affine(form3.H, kM,
                                   {{"n", form("m", s, s)}, {"k", form("m", t, t)},
                                    {"a", form("m", r, u)}}));
  }
  for (long j = 0; j < t; ++j) {
    push_nonzero(spec.summands,
                 substitute_affine(form3.F, kM,
                                   {{"n", form("m", s, s)}, {"k", form("m", t, j)},
                                    {"a", form("m", r, 0)}}));
  }
  for (long i = 0; i < s; ++i) {
    push_nonzero(spec.summands,
                 substitute_affine(form3.G, kM,
                                   {{"n", form("m", s, i)}, {"k", form("m", t, 0)},
                                    {"a", form("m", r, 0)}}));
  }
  spec.boundaryTerms.push_back({BoundaryKind::RowSumOfF, {s, t, r}, 0});
  spec.boundaryTerms.push_back({BoundaryKind::ColSumOfG, {s, t, r}, 0});
  spec.provenance = {pairId, s, t, r};
  return spec;
}

SeriesSpec lhs_series(const WZForm3& form3, const std::string& pairId) {
  SeriesSpec spec;
  push_nonzero(spec.summands,
               substitute_affine(form3.H, kM,
                                 {{"n", form("m", 0, 0)}, {"k", form("m", 0, 0)},
                                  {"a", form("m", 1, 0)}}));
  spec.provenance = {pairId, 0, 0, 0};
  return spec;
}

ProperTerm combine_to_closed_form(const SeriesSpec& spec) {
  if (spec.summands.empty()) return ProperTerm::zero(kM);
  if (spec.summands.size() == 1) return spec.summands.front();
  auto out = combine_similar(spec.summands);
  if (!out) throw NotSimilarPair("summands of the series are not similar");
  return *std::move(out);
}

}  // namespace wzaccel
