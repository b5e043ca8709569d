#include "wzaccel/wz.hpp"

#include <stdexcept>

#include "wzaccel/errors.hpp"

namespace wzaccel {

namespace {

// X = rx * ref with rx = num/den. Returns the numerator and denominator of
// (X(var+1) - X(var)) / ref.
RawRatio forward_difference(const RawRatio& rx, const RawRatio& ref_shift,
                            std::size_t var) {
  const Polynomial a1 = rx.num.shift(var, 1);
  const Polynomial b1 = rx.den.shift(var, 1);
  return {a1 * ref_shift.num * rx.den - rx.num * b1 * ref_shift.den,
          b1 * ref_shift.den * rx.den};
}

Polynomial identity_residue(const RawRatio& lhs, const RawRatio& rhs) {
  Polynomial r = lhs.num * rhs.den - rhs.num * lhs.den;
  return r.is_zero() ? r : r.primitive_part();
}

RawRatio ratio_to(const ProperTerm& x, const ProperTerm& ref) {
  if (x.is_zero()) {
    return {Polynomial(ref.variables()), Polynomial::constant(ref.variables(), 1)};
  }
  auto r = similarity_ratio_raw(x, ref);
  if (!r) throw NotSimilarPair("components of the form are not similar");
  return *std::move(r);
}

void require_variables(const ProperTerm& t, std::initializer_list<const char*> names) {
  for (const char* name : names) t.index_of(name);
}

}  // namespace

WZCheck verify_wz(const ProperTerm& F, const ProperTerm& G) {
  if (F.is_zero()) throw ZeroTerm("verify_wz: F is identically zero");
  if (F.variables() != G.variables()) {
    throw VariableMismatch("F and G use different variables");
  }
  require_variables(F, {"n", "k"});
  auto R = similarity_ratio_raw(G, F);
  if (!R) throw NotSimilarPair("G / F is not a rational function");

  const auto& vars = F.variables();
  const std::size_t n = F.index_of("n");
  const std::size_t k = F.index_of("k");
  const RawRatio one{Polynomial::constant(vars, 1), Polynomial::constant(vars, 1)};
  const RawRatio lhs = forward_difference(one, shift_ratio_raw(F, "n"), n);
  const RawRatio rhs = forward_difference(*R, shift_ratio_raw(F, "k"), k);
  WZCheck out;
  out.residue = identity_residue(lhs, rhs);
  out.verified = out.residue.is_zero();
  return out;
}

WZCheck verify_wz3(const ProperTerm& F, const ProperTerm& G, const ProperTerm& H) {
  if (F.variables() != G.variables() || F.variables() != H.variables()) {
    throw VariableMismatch("components use different variables");
  }
  require_variables(F, {"n", "k", "a"});
  const ProperTerm* ref = nullptr;
  for (const ProperTerm* t : {&F, &G, &H}) {
    if (!t->is_zero()) {
      ref = t;
      break;
    }
  }
  WZCheck out;
  out.residue = Polynomial(F.variables());
  if (!ref) {
    out.verified = true;
    return out;
  }
  const RawRatio rf = ratio_to(F, *ref);
  const RawRatio rg = ratio_to(G, *ref);
  const RawRatio rh = ratio_to(H, *ref);
  const std::size_t n = F.index_of("n");
  const std::size_t k = F.index_of("k");
  const std::size_t a = F.index_of("a");
  const RawRatio sn = shift_ratio_raw(*ref, "n");
  const RawRatio sk = shift_ratio_raw(*ref, "k");
  const RawRatio sa = shift_ratio_raw(*ref, "a");

  const std::pair<RawRatio, RawRatio> identities[] = {
      {forward_difference(rf, sn, n), forward_difference(rg, sk, k)},
      {forward_difference(rf, sa, a), forward_difference(rh, sk, k)},
      {forward_difference(rg, sa, a), forward_difference(rh, sn, n)},
  };
  for (const auto& [lhs, rhs] : identities) {
    Polynomial r = identity_residue(lhs, rhs);
    if (!r.is_zero()) {
      out.residue = std::move(r);
      return out;
    }
  }
  out.verified = true;
  return out;
}

WZCheck verify_wz3(const WZForm3& form) { return verify_wz3(form.F, form.G, form.H); }

WZForm WZForm::certified(ProperTerm F, ProperTerm G) {
  const WZCheck check = verify_wz(F, G);
  if (!check) {
    throw VerificationFailed("not a WZ pair; residue " + check.residue.to_string());
  }
  return WZForm{std::move(F), std::move(G), true};
}

WZForm3 WZForm3::certified(ProperTerm F, ProperTerm G, ProperTerm H) {
  const WZCheck check = verify_wz3(F, G, H);
  if (!check) {
    throw VerificationFailed("not a closed 3-form; residue " + check.residue.to_string());
  }
  return WZForm3{std::move(F), std::move(G), std::move(H), true};
}

ProperTerm find_companion(const ProperTerm& F) {
  if (F.is_zero()) throw ZeroTerm("find_companion: F is identically zero");
  require_variables(F, {"n", "k"});
  const auto& vars = F.variables();
  const RationalFunction delta = shift_ratio(F, "n") - RationalFunction::constant(vars, 1);
  if (delta.is_zero()) return ProperTerm::zero(vars);

  const ProperTerm H = F.times(delta);
  auto S = gosper(H, "k");
  if (!S) throw NoHypergeometricAntidifference();
  ProperTerm G = normalize_gamma(F.times(*S * delta));
  if (!verify_wz(F, G)) {
    throw std::logic_error("find_companion: companion failed verification");
  }
  return G;
}

CertificateForm to_certificate_form(const WZForm& pair) {
  if (!pair.verified) throw InvalidArgument("to_certificate_form needs a verified pair");
  const ProperTerm& F = pair.F;
  const auto& vars = F.variables();
  auto R = similarity_ratio(pair.G, F);
  if (!R) throw NotSimilarPair();
  const Polynomial& num_f = F.prefactor().numerator();
  const Polynomial& den_f = F.prefactor().denominator();
  CertificateForm out;
  out.f = ProperTerm(vars, F.constant(), F.geometric(),
                     RationalFunction(Polynomial::constant(vars, 1),
                                      den_f * R->denominator()),
                     F.factors());
  out.P = num_f * R->denominator();
  out.Q = num_f * R->numerator();
  return out;
}

}  // namespace wzaccel
