#include "geronimus/secondkind.hpp"

#include "geronimus/error.hpp"

#include <cmath>
#include <sstream>

namespace geronimus {

namespace {

constexpr int kExtraDepth = 60;
constexpr int kMaxDoublings = 8;
constexpr double kAgreement = 1e-14;

// ratio(k) = r_{k-1} for k = 0..n_max+1, from a zero tail at `depth`.
Eigen::VectorXd ratios_at_depth(const MeasureSpec& spec, double c, int n_max, int depth)
{
  Eigen::VectorXd out(n_max + 2);
  double r = 0.0; // r_depth
  for (int m = depth; m >= 1; --m) {
    // r_{m-1} = gamma_m / ((c - beta_m) - r_m)
    r = recurrence_gamma(spec, m) / ((c - recurrence_beta(spec, m)) - r);
    if (m - 1 <= n_max)
      out(m) = r;
  }
  // F_1 = mu0 + (c - beta_0) F_0 and F_1 = r_0 F_0
  out(0) = -total_mass(spec) / ((c - recurrence_beta(spec, 0)) - out(1));
  return out;
}

} // namespace

void require_outside_support(const MeasureSpec& spec, double c)
{
  if (!std::isfinite(c) || spec.distance(c) <= kShiftMargin) {
    std::ostringstream os;
    os << "shift c = " << c << " must lie outside the support [" << spec.lower() << ", " << spec.upper()
       << "] of " << spec.describe();
    throw ShiftInsideSupport(os.str());
  }
}

SecondKindTable second_kind(const MeasureSpec& spec, double c, int n_max)
{
  validate(spec);
  require_outside_support(spec, c);
  if (n_max < 0)
    throw DomainError("second_kind: n_max must be non-negative");

  int depth = n_max + kExtraDepth;
  Eigen::VectorXd previous = ratios_at_depth(spec, c, n_max, depth);
  for (int attempt = 0; attempt < kMaxDoublings; ++attempt) {
    depth *= 2;
    Eigen::VectorXd current = ratios_at_depth(spec, c, n_max, depth);
    const double diff = ((current - previous).array().abs() / current.array().abs()).maxCoeff();
    if (diff <= kAgreement) {
      SecondKindTable table;
      table.c = c;
      table.depth = depth;
      table.ratio = current.head(n_max + 1);
      table.f.resize(n_max + 2);
      table.f(0) = 1.0;
      for (int k = 1; k <= n_max + 1; ++k)
        table.f(k) = table.f(k - 1) * current(k - 1);
      return table;
    }
    previous = std::move(current);
  }
  std::ostringstream os;
  os << "second_kind: continued fraction did not converge for " << spec.describe() << ", c = " << c
     << " (depth " << depth << ")";
  throw NumericalFailure(os.str());
}

double f0(const MeasureSpec& spec, double c) { return second_kind(spec, c, 0).F(0); }

} // namespace geronimus
