#pragma once

#include "geronimus/measures.hpp"

#include <Eigen/Core>

namespace geronimus {

/// Functions of the second kind F_n(c) = \int P_n(x) / (x - c) dmu(x) at a shift outside the support.
struct SecondKindTable {
  double c = 0.0;
  Eigen::VectorXd f;     ///< f(k) = F_{k-1}(c), k = 0..n_max+1 (F_{-1} = 1)
  Eigen::VectorXd ratio; ///< ratio(k) = r_{k-1} = F_k / F_{k-1}, k = 0..n_max
  int depth = 0;         ///< continued-fraction depth that certified convergence

  double F(int n) const { return f(n + 1); }     ///< n >= -1
  double r(int n) const { return ratio(n + 1); } ///< n >= -1
  int max_degree() const { return static_cast<int>(f.size()) - 2; }
};

/// Minimum distance between the shift and the support.
inline constexpr double kShiftMargin = 1e-10;

/// Throws ShiftInsideSupport unless c is outside the support by more than kShiftMargin.
void require_outside_support(const MeasureSpec& spec, double c);

/// F_0(c), the Stieltjes transform of the measure.
double f0(const MeasureSpec& spec, double c);

/// F_{-1..n_max}(c) as the minimal solution of the recurrence, via backward continued fractions.
SecondKindTable second_kind(const MeasureSpec& spec, double c, int n_max);

} // namespace geronimus
