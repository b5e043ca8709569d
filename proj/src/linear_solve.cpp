#include "wzaccel/linear_solve.hpp"

#include <stdexcept>

#include "wzaccel/errors.hpp"

namespace wzaccel {

namespace {

// Ring operations used by the elimination. Division is only ever exact.
struct RationalRing {
  using Elem = Rational;
  using Frac = Rational;
  Elem one() const { return 1; }
  Elem zero() const { return 0; }
  static bool is_zero(const Elem& e) { return e == 0; }
  static Elem div_exact(const Elem& a, const Elem& b) { return a / b; }
  static Frac to_frac(const Elem& e) { return e; }
  Frac zero_frac() const { return 0; }
};

struct PolynomialRing {
  using Elem = Polynomial;
  using Frac = RationalFunction;
  std::vector<std::string> vars;
  Elem one() const { return Polynomial::constant(vars, 1); }
  Elem zero() const { return Polynomial(vars); }
  static bool is_zero(const Elem& e) { return e.is_zero(); }
  static Elem div_exact(const Elem& a, const Elem& b) {
    auto q = divide_exact(a, b);
    if (!q) throw std::logic_error("Bareiss step is not exact");
    return *std::move(q);
  }
  static Frac to_frac(const Elem& e) { return RationalFunction(e); }
  Frac zero_frac() const { return RationalFunction::constant(vars, 0); }
};

template <typename Ring>
LinearSolution<typename Ring::Frac> bareiss_solve(
    const Ring& ring, std::vector<std::vector<typename Ring::Elem>> m,
    const std::vector<typename Ring::Elem>& rhs) {
  using Elem = typename Ring::Elem;
  using Frac = typename Ring::Frac;
  const std::size_t rows = m.size();
  if (rhs.size() != rows) throw InvalidArgument("rhs length differs from row count");
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  for (std::size_t i = 0; i < rows; ++i) {
    if (m[i].size() != cols) throw InvalidArgument("matrix is not rectangular");
    m[i].push_back(rhs[i]);
  }

  Elem prev = ring.one();
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && Ring::is_zero(m[p][c])) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j <= cols; ++j) {
        Elem v = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        m[i][j] = Ring::div_exact(v, prev);
      }
      m[i][c] = ring.zero();
    }
    prev = m[r][c];
    pivot_cols.push_back(c);
    ++r;
  }

  LinearSolution<Frac> out;
  for (std::size_t i = r; i < rows; ++i) {
    if (!Ring::is_zero(m[i][cols])) {
      out.status = SolveStatus::NoSolution;
      return out;
    }
  }

  out.x.assign(cols, ring.zero_frac());
  for (std::size_t ri = r; ri-- > 0;) {
    const std::size_t pc = pivot_cols[ri];
    Frac acc = Ring::to_frac(m[ri][cols]);
    for (std::size_t j = pc + 1; j < cols; ++j) {
      if (Ring::is_zero(m[ri][j])) continue;
      acc -= Ring::to_frac(m[ri][j]) * out.x[j];
    }
    out.x[pc] = acc / Ring::to_frac(m[ri][pc]);
  }
  out.status = r < cols ? SolveStatus::UnderDetermined : SolveStatus::Unique;
  return out;
}

}  // namespace

LinearSolution<Rational> solve_linear(
    const std::vector<std::vector<Rational>>& matrix,
    const std::vector<Rational>& rhs) {
  return bareiss_solve(RationalRing{}, matrix, rhs);
}

LinearSolution<RationalFunction> solve_linear(
    const std::vector<std::vector<Polynomial>>& matrix,
    const std::vector<Polynomial>& rhs) {
  std::vector<std::string> vars;
  if (!rhs.empty()) vars = rhs.front().variables();
  return bareiss_solve(PolynomialRing{vars}, matrix, rhs);
}

}  // namespace wzaccel
