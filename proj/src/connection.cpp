#include "geronimus/connection.hpp"

#include "geronimus/error.hpp"

#include <cmath>

namespace geronimus {

namespace {

constexpr double kRemovableSwitch = 1e-8;
constexpr double kConfluentSwitch = 1e-8;

void require_degree(const GeronimusContext& ctx, int n, int low)
{
  if (n < low || n > ctx.max_degree() + 1)
    throw DomainError("degree " + std::to_string(n) + " outside the tabulated range");
}

} // namespace

MonicValue<double> christoffel_kernel_poly(const GeronimusContext& ctx, int n, double x)
{
  const auto p = evaluate_pair(ctx.classical().coefficients, n + 1, x);
  const double pi = ctx.pi(n);
  const double h = x - ctx.c();
  if (std::abs(h) < kRemovableSwitch) {
    const double d1 = p.current.derivative - pi * p.previous.derivative;
    const double d2 = p.current.second - pi * p.previous.second;
    return {d1 + 0.5 * h * d2, 0.5 * d2, 0.0};
  }
  const double num = p.current.value - pi * p.previous.value;
  const double dnum = p.current.derivative - pi * p.previous.derivative;
  const double d2num = p.current.second - pi * p.previous.second;
  const double v = num / h;
  const double dv = (dnum - v) / h;
  return {v, dv, (d2num - 2.0 * dv) / h};
}

MonicValue<double> eval_QcN_kernel_form(const GeronimusContext& ctx, int n, double x)
{
  if (n == 0)
    return {1.0, 0.0, 0.0};
  const auto q = eval_Qc(ctx, n, x);
  const double nb = ctx.mass() * ctx.B(n);
  const double k = 1.0 + nb;
  const auto g = evaluate(ctx.christoffel(), n - 1, x);
  const double h = x - ctx.c();
  // (x - c) g and its derivatives
  const double v = h * g.value;
  const double dv = g.value + h * g.derivative;
  const double d2v = 2.0 * g.derivative + h * g.second;
  return {(q.value + nb * v) / k, (q.derivative + nb * dv) / k, (q.second + nb * d2v) / k};
}

double kernel_c(const GeronimusContext& ctx, int n, double x, double y)
{
  const auto& rec = ctx.modified();
  const double norm = ctx.modified_norm_sq()(n);
  const auto px = evaluate_pair(rec, n + 1, x);
  if (std::abs(x - y) < kConfluentSwitch * (1.0 + std::abs(x)))
    return (px.current.derivative * px.previous.value - px.previous.derivative * px.current.value) / norm;
  const auto py = evaluate_pair(rec, n + 1, y);
  return (px.current.value * py.previous.value - py.current.value * px.previous.value) / ((x - y) * norm);
}

double kernel_c_by_sum(const GeronimusContext& ctx, int n, double x, double y)
{
  double sum = 0.0;
  for (int k = 0; k <= n; ++k)
    sum += evaluate(ctx.modified(), k, x).value * evaluate(ctx.modified(), k, y).value / ctx.modified_norm_sq()(k);
  return sum;
}

double kernel_c_confluent(const GeronimusContext& ctx, int n) { return kernel_c(ctx, n, ctx.c(), ctx.c()); }

ConnectionData connection_data(const GeronimusContext& ctx, int n)
{
  require_degree(ctx, n, 1);
  ConnectionData d;
  d.n = n;
  d.pi_prev = ctx.pi(n - 1);
  d.r_prev = ctx.r(n - 1);
  d.kernel_diagonal = ctx.B(n);
  d.lambda = ctx.Lambda(n);
  d.kappa = ctx.kappa(n);
  d.value_at_shift = eval_Qc(ctx, n, ctx.c()).value / d.kappa;
  return d;
}

ConnectionAudit connection_audit(const GeronimusContext& ctx, int n)
{
  require_degree(ctx, n, 1);
  const double s = ctx.orientation();
  const double c = ctx.c();
  const auto p = evaluate_pair(ctx.classical().coefficients, n, c);
  const double pn = p.current.value, pm = p.previous.value;
  const double norm = ctx.classical().norm_sq(n - 1);
  const double r = ctx.r(n - 1), pi = ctx.pi(n - 1);

  ConnectionAudit a;
  a.B_product = -s * eval_Qc(ctx, n, c).value * pm / norm;
  a.B_expanded = s * (r * pm * pm - pn * pm) / norm;
  a.B_confluent = kernel_c_confluent(ctx, n - 1);
  a.lambda_direct = ctx.Lambda(n);
  a.lambda_inverse = 1.0 / (1.0 / (pi - r) - s * ctx.mass() * pm * pm / norm) - pi;
  a.value_at_shift_direct = pn + a.lambda_direct * pm;
  a.value_at_shift_kernel = eval_Qc(ctx, n, c).value / ctx.kappa(n);
  return a;
}

KernelConnection kernel_connection_coeffs(const GeronimusContext& ctx, int n)
{
  require_degree(ctx, n, 0);
  const double c = ctx.c();
  const double q0 = eval_Qc(ctx, n, c).value;
  const double q1 = eval_Qc(ctx, n + 1, c).value;
  const double q2 = eval_Qc(ctx, n + 2, c).value;
  KernelConnection k;
  k.e = ctx.pi(n) * q1 / q0;
  k.d = q2 / q1 + ctx.pi(n);
  // Q^c_{n+2} = (x - beta^c_{n+1}) Q^c_{n+1} - gamma^c_{n+1} Q^c_n
  k.e_minus_gamma = k.e - ctx.modified().gamma(n + 1);
  k.e_minus_gamma_alt = q1 * q1 / (ctx.modified_norm_sq()(n) * kernel_c_confluent(ctx, n));
  return k;
}

} // namespace geronimus
