#pragma once

#include <optional>
#include <string>

#include "wzaccel/hyperterm.hpp"

namespace wzaccel {

/// Outcome of a symbolic WZ check. `residue` is the cleared-denominator
/// polynomial of the failing identity; zero when verified.
struct WZCheck {
  bool verified = false;
  Polynomial residue;
  explicit operator bool() const { return verified; }
};

/// F dk + G dn over the variables (n, k).
struct WZForm {
  ProperTerm F;
  ProperTerm G;
  bool verified = false;

  /// Runs verify_wz and throws VerificationFailed on a counterexample.
  static WZForm certified(ProperTerm F, ProperTerm G);
};

/// F dk + G dn + H da over the variables (n, k, a).
struct WZForm3 {
  ProperTerm F;
  ProperTerm G;
  ProperTerm H;
  bool verified = false;

  static WZForm3 certified(ProperTerm F, ProperTerm G, ProperTerm H);
};

/// Normal form f * (P dk + Q dn) with polynomial P, Q.
struct CertificateForm {
  ProperTerm f;
  Polynomial P;
  Polynomial Q;
};

/// Checks F(n+1,k) - F(n,k) = G(n,k+1) - G(n,k) as an identity of rational
/// functions. Throws ZeroTerm if F = 0 and NotSimilarPair if G/F is not
/// rational.
WZCheck verify_wz(const ProperTerm& F, const ProperTerm& G);

/// Closedness of F dk + G dn + H da: the three mixed-difference identities.
/// Zero components are allowed; throws NotSimilarPair when the nonzero
/// components are not pairwise similar.
WZCheck verify_wz3(const ProperTerm& F, const ProperTerm& G, const ProperTerm& H);
WZCheck verify_wz3(const WZForm3& form);

/// Gosper's algorithm in `var`, all other variables treated as parameters.
/// Returns S with S(var+1) T(var+1) - S T = T, or nullopt when T has no
/// hypergeometric antidifference. Throws ZeroTerm for T = 0.
std::optional<RationalFunction> gosper(const ProperTerm& term,
                                       std::string_view var = "k");

/// Companion G = S * F from Gosper applied in k to F(n+1,k) - F(n,k).
/// Throws ZeroTerm, NoHypergeometricAntidifference.
ProperTerm find_companion(const ProperTerm& F);

CertificateForm to_certificate_form(const WZForm& pair);

}  // namespace wzaccel
