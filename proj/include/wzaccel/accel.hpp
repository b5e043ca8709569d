#pragma once

#include <array>
#include <string>
#include <vector>

#include "wzaccel/wz.hpp"

namespace wzaccel {

enum class BoundaryKind { RowSumOfF, ColSumOfG };

/// A limit term subtracted from an accelerated series. The limit itself is
/// not proven; `claimedLimit` is what the series value assumes (default 0).
struct BoundaryDescriptor {
  BoundaryKind kind = BoundaryKind::RowSumOfF;
  std::vector<long> parameters;
  Rational claimedLimit = 0;
  friend bool operator==(const BoundaryDescriptor&, const BoundaryDescriptor&) = default;
};

struct Provenance {
  std::string pairId;
  long s = 1;
  long t = 1;
  long r = 0;  // 0 for two-variable forms
  friend bool operator==(const Provenance&, const Provenance&) = default;
};

/// Univariate series in m: sum over m >= startIndex of the summand total,
/// minus the claimed boundary limits.
struct SeriesSpec {
  std::vector<ProperTerm> summands;
  long startIndex = 0;
  std::vector<BoundaryDescriptor> boundaryTerms;
  Provenance provenance;
  friend bool operator==(const SeriesSpec&, const SeriesSpec&) = default;
};

/// sum_k F(0,k) - lim_n sum_{k<=n} F(n,k) = sum_n G(n,0) - lim_k sum_{n<=k} G(n,k)
struct IdentitySpec {
  ProperTerm F;
  ProperTerm G;
  /// Textual form of the four sums, left side first.
  std::array<std::string, 4> terms;
};

/// F_s(n,k) = F(sn,k), G_s(n,k) = sum_{i<s} G(sn+i,k); verified before return.
WZForm build_omega_s(const WZForm& pair, long s);

/// F_{s,t}(n,k) = sum_{j<t} F(sn,tk+j), G_{s,t}(n,k) = sum_{i<s} G(sn+i,tk).
WZForm build_omega_st(const WZForm& pair, long s, long t);

/// Summands F(s(m+1), m) and G(sm+i, m) for i < s.
SeriesSpec series_formula1(const WZForm& pair, long s, const std::string& pairId = "");

/// Summands F(s(m+1), tm+j) for j < t and G(sm+i, tm) for i < s.
SeriesSpec series_formula3(const WZForm& pair, long s, long t,
                           const std::string& pairId = "");

/// The common left side sum_m G(m,0).
SeriesSpec lhs_series(const WZForm& pair, const std::string& pairId = "");

/// Throws Inapplicable when F(0,k) or G(n,0) is Undefined for every small index.
IdentitySpec identity_formula2(const WZForm& pair);

/// Summands H(s(m+1), t(m+1), rm+u), F(s(m+1), tm+j, rm), G(sm+i, tm, rm).
SeriesSpec series_formula4(const WZForm3& form, long s, long t, long r,
                           const std::string& pairId = "");

/// The left side sum_m H(0,0,m).
SeriesSpec lhs_series(const WZForm3& form, const std::string& pairId = "");

/// Single term equal to the summand total. Throws NotSimilarPair.
ProperTerm combine_to_closed_form(const SeriesSpec& spec);

}  // namespace wzaccel
