#pragma once

// Hand-built pairs and independent oracles shared by the unit tests and the
// acceptance binary.

#include <string>
#include <vector>

#include "wzaccel/accel.hpp"

namespace support {

using wzaccel::Integer;
using wzaccel::LinearForm;
using wzaccel::Polynomial;
using wzaccel::ProperTerm;
using wzaccel::Rational;

LinearForm lin(long n, long k, long c, long a = 0, long m = 0);

/// constant * geometric * poly * prod factors over `vars`, with `poly` given
/// as a map from exponent vector to coefficient.
ProperTerm make_term(const std::vector<std::string>& vars, Rational constant,
                     wzaccel::GeometricMap geometric, const Polynomial& poly,
                     std::vector<wzaccel::GammaFactor> factors);

/// Linear polynomial c_n n + c_k k + c over (n, k).
Polynomial poly_nk(long cn, long ck, long c);

/// (-1)^k n!^6 (2n-k-1)! k!^3 / (2 (n+k+1)!^2 (2n)!^3)
ProperTerm zeta3_F();
/// (-1)^m m!^10 (205m^2+250m+77) / (64 (2m+1)!^5)
ProperTerm zeta3_closed_form();

Rational factorial(long n);

/// phi = n! k! / (n+k+2)!, F = phi(n,k+1) - phi, G = phi(n+1,k) - phi.
wzaccel::WZForm potential_pair();
Rational potential_phi(long n, long k);

/// phi = n! k! / (n+2k+2)!, not symmetric in n and k.
wzaccel::WZForm skew_potential_pair();
Rational skew_phi(long n, long k);

/// phi = 2^k n! k! / (n+k)!, whose row sums tend to -1.
wzaccel::WZForm growth_pair();

/// phi = n! k! a! / (2^(n+k+a) (n+k+a+3)!) with its discrete gradient
/// (F, G, H).
wzaccel::WZForm3 potential_form3();
Rational potential3_phi(long n, long k, long a);

struct GridResult {
  bool holds = true;
  int checked = 0;
};
/// F(n+1,k) - F(n,k) = G(n,k+1) - G(n,k) at every 0 <= n,k <= bound where
/// all four values are finite.
GridResult grid_wz_check(const ProperTerm& F, const ProperTerm& G, long bound);

/// zeta(3) from sum_{n<=N} n^-3 and Euler-Maclaurin corrections through
/// N^-12, exact.
Rational zeta3_euler_maclaurin(long N);

/// `digits` significant digits of x, rounded half-up, formatted d.ddd for
/// 0.1 <= |x| < 10.
std::string round_decimal(const Rational& x, long digits);

}  // namespace support
