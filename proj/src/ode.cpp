#include "geronimus/ode.hpp"

#include "geronimus/connection.hpp"
#include "geronimus/error.hpp"
#include "geronimus/ladder.hpp"
#include "geronimus/zeros.hpp"

#include <unsupported/Eigen/AutoDiff>

#include <algorithm>
#include <cmath>

namespace geronimus {

namespace {

using Dual = Eigen::AutoDiffScalar<Eigen::Matrix<double, 1, 1>>;

Dual variable(double x) { return Dual(x, Eigen::Matrix<double, 1, 1>::Constant(1.0)); }

double d(const Dual& v) { return v.derivatives()(0); }

} // namespace

ShortRange short_range(const GeronimusContext& ctx, int n, double x)
{
  const double L = ctx.Lambda(n);
  const double a = ctx.spec().alpha;
  if (ctx.spec().family == Family::Laguerre) {
    const double k = (n - L) * (n + a - L);
    return {L * x + k, L, -k / L};
  }
  const double b = ctx.spec().beta;
  const double s = 2.0 * n + a + b;
  const double top = 4.0 * n * (n + a) * (n + b) * (n + a + b);
  const double lead = (s - 1.0) * s * L;
  const double u = top + lead * (s * s * x + (a + b) * (a - b) + (s - 1.0) * s * L);
  const double root = -((a * a - b * b) * s + top / ((s - 1.0) * L)) / (s * s * s) - (s - 1.0) * s * s * L / (s * s * s);
  return {u, lead * s * s, root};
}

OdeCoefficientSet ode_coefficients(const GeronimusContext& ctx, int n, double x)
{
  const auto k = ladder_coefficients(ctx, n, variable(x));
  const double eta1 = k.eta1.value();
  if (eta1 == 0.0 || !std::isfinite(eta1) || k.Delta.value() == 0.0)
    throw SingularPoint("ODE coefficients: eta1 or Delta vanishes at x");
  OdeCoefficientSet out;
  out.R = -(k.xi1.value() + k.eta2.value() + d(k.eta1) / eta1);
  out.S = k.xi1.value() * k.eta2.value() - eta1 * k.xi2.value() +
          (k.xi1.value() * d(k.eta1) - d(k.xi1) * eta1) / eta1;

  const double L = ctx.Lambda(n);
  const double a = ctx.spec().alpha;
  const ShortRange sr = short_range(ctx, n, x);
  out.u = sr.u;
  out.z = sr.root;
  if (ctx.spec().family == Family::Laguerre) {
    out.R_closed = -L / sr.u + (a + 1.0) / x - 1.0;
    out.S_closed = (L * x + (n + a) * (n - L)) / (x * sr.u) + (n - 1.0) / x;
  } else {
    const double b = ctx.spec().beta;
    out.R_closed = -sr.du / sr.u - (2.0 * x - b * (1.0 - x) + a * (1.0 + x)) / ((1.0 - x) * (1.0 + x));
  }
  return out;
}

double ode_residual(const GeronimusContext& ctx, int n, double x)
{
  const auto c = ode_coefficients(ctx, n, x);
  const auto q = eval_QcN(ctx, n, x);
  const double t1 = q.second, t2 = c.R * q.derivative, t3 = c.S * q.value;
  const double scale = std::max({std::abs(t1), std::abs(t2), std::abs(t3)});
  return scale > 0.0 ? std::abs(t1 + t2 + t3) / scale : 0.0;
}

ExternalPotential external_potential(const GeronimusContext& ctx, int n, double x)
{
  const auto& spec = ctx.spec();
  const ShortRange sr = short_range(ctx, n, x);
  if (!(sr.u > 0.0))
    throw DomainError("external potential: u(x) <= 0");
  if (!(x > spec.lower() && x < spec.upper()))
    throw DomainError("external potential: x outside the interior of the support");
  double log_weight;
  if (spec.family == Family::Laguerre)
    log_weight = (spec.alpha + 1.0) * std::log(x) - x;
  else
    log_weight = (spec.alpha + 1.0) * std::log(1.0 - x) + (spec.beta + 1.0) * std::log(1.0 + x);
  return {0.5 * std::log(sr.u) - 0.5 * log_weight, sr.u, sr.root};
}

double EquilibriumReport::max_residual() const
{
  return residuals.size() ? std::max(residuals.maxCoeff(), dual_residuals.maxCoeff()) : 0.0;
}

EquilibriumReport equilibrium_residual(const GeronimusContext& ctx, int n)
{
  const auto& spec = ctx.spec();
  EquilibriumReport rep;
  rep.zeros = anchored_zeros(ctx, n).zeros();
  rep.residuals.resize(n);
  rep.dual_residuals.resize(n);
  const double a = spec.alpha, b = spec.beta;
  for (int k = 0; k < n; ++k) {
    const double y = rep.zeros(k);
    double sum = 0.0, largest = 0.0;
    for (int j = 0; j < n; ++j) {
      if (j == k)
        continue;
      const double gap = rep.zeros(j) - y;
      if (std::abs(gap) < 1e-12)
        throw NumericalFailure("equilibrium: colliding zeros");
      sum += 1.0 / gap;
      largest = std::max(largest, std::abs(1.0 / gap));
    }
    const ShortRange sr = short_range(ctx, n, y);
    double field[3];
    field[0] = 0.5 * sr.du / sr.u;
    if (spec.family == Family::Laguerre) {
      field[1] = -0.5 * (a + 1.0) / y;
      field[2] = 0.5;
    } else {
      field[1] = 0.5 * (a + 1.0) / (1.0 - y);
      field[2] = -0.5 * (b + 1.0) / (1.0 + y);
    }
    double total = sum;
    for (double f : field) {
      total += f;
      largest = std::max(largest, std::abs(f));
    }
    rep.residuals(k) = std::abs(total) / largest;

    // the same balance read from the differential equation at the zero
    const auto q = eval_QcN(ctx, n, y);
    const double pair_sum = 0.5 * q.second / q.derivative; // sum_{j != k} 1 / (y - y_j)
    rep.dual_residuals(k) = std::abs(-pair_sum + (total - sum)) / largest;
  }
  return rep;
}

} // namespace geronimus
