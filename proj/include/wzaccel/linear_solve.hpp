#pragma once

#include <vector>

#include "wzaccel/ratfunc.hpp"

namespace wzaccel {

enum class SolveStatus { Unique, UnderDetermined, NoSolution };

/// Outcome of an exact linear solve. For UnderDetermined the solution is a
/// witness with every free variable set to zero; for NoSolution it is empty.
template <typename Value>
struct LinearSolution {
  SolveStatus status = SolveStatus::NoSolution;
  std::vector<Value> x;
};

/// Fraction-free (Bareiss) elimination over Q.
LinearSolution<Rational> solve_linear(
    const std::vector<std::vector<Rational>>& matrix,
    const std::vector<Rational>& rhs);

/// The same elimination over the polynomial ring Q[vars], returning the
/// solution in the fraction field. All entries share one variable list.
LinearSolution<RationalFunction> solve_linear(
    const std::vector<std::vector<Polynomial>>& matrix,
    const std::vector<Polynomial>& rhs);

}  // namespace wzaccel
