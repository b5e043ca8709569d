#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wzaccel/accel.hpp"

namespace wzaccel {

enum class SumMethod {
  Loop,   // term-by-term ratio recurrence at working precision
  Split,  // exact binary splitting, one rounding per summand
};

struct EvalOptions {
  SumMethod method = SumMethod::Split;
  /// Maximum number of terms; 0 means WZACCEL_TERM_BUDGET or 10000.
  long termBudget = 0;
};

struct EvalReport {
  std::string value;        // `digits` significant digits, rounded to nearest
  long digits = 0;
  long termsUsed = 0;
  std::string tailBound;    // upper bound on the truncation error
  double tailBoundLog10 = 0;
  double digitsPerTerm = 0;
  std::string wallNotes;
  friend bool operator==(const EvalReport&, const EvalReport&) = default;
};

/// Term budget from WZACCEL_TERM_BUDGET, default 10000.
long default_term_budget();

/// Sum of the series to `digits` significant digits, boundary limits taken
/// at their claimed values. Throws UndefinedTerm, NoConvergenceDetected,
/// InvalidArgument (digits < 1).
EvalReport eval_series(const SeriesSpec& spec, long digits, const EvalOptions& options = {});
/// Sum over m >= 0 of a univariate term.
EvalReport eval_series(const ProperTerm& term, long digits, const EvalOptions& options = {});

enum class BoundaryVerdict { VanishesNumerically, Inconclusive };

struct BoundarySample {
  long n = 0;
  std::string magnitude;
  double log10Magnitude = 0;
};

struct BoundaryCheckReport {
  std::vector<BoundarySample> samples;
  std::optional<long> monotoneFromIndex;
  BoundaryVerdict verdict = BoundaryVerdict::Inconclusive;
};

/// Row sums sum_{k<n} F_{s,t}(n,k) for n = 1..nMax, computed exactly.
BoundaryCheckReport check_boundary_vanishing(const WZForm& pair, long s, long t, long nMax);

struct IdentityResidual {
  Rational exact;           // LHS - RHS
  std::string magnitude;    // |LHS - RHS| to `digits` digits
  double log10Magnitude = 0;
  long digits = 0;
  long truncation = 0;
};

/// Both sides of the two-variable boundary identity with every infinite sum
/// and every limit cut at `truncation`.
IdentityResidual verify_identity_numeric(const IdentitySpec& spec, long digits, long truncation);

struct GridCell {
  long s = 0;
  long t = 0;
  std::optional<double> digitsPerTerm;
  std::optional<long> termsFor100Digits;
  std::string value;
  std::string error;  // empty on success
};

/// One cell per (s, t), in row-major order of the ranges. Cells are evaluated
/// concurrently; a failing cell records its error and leaves the others intact.
std::vector<GridCell> convergence_grid(const WZForm& pair, std::span<const long> sRange,
                                       std::span<const long> tRange, long digits);

}  // namespace wzaccel
