#pragma once

#include "geronimus/context.hpp"
#include "geronimus/recurrence.hpp"

namespace geronimus {

/// Q^c_n = P_n - r_{n-1} P_{n-1}, orthogonal for d nu.
template <typename Scalar>
MonicValue<Scalar> eval_Qc(const GeronimusContext& ctx, int n, const Scalar& x)
{
  if (n == 0)
    return evaluate(ctx.classical().coefficients, 0, x);
  const auto p = evaluate_pair(ctx.classical().coefficients, n, x);
  const double r = ctx.r(n - 1);
  return {p.current.value - r * p.previous.value, p.current.derivative - r * p.previous.derivative,
          p.current.second - r * p.previous.second};
}

/// Q^c_n from the modified three-term recurrence.
template <typename Scalar>
MonicValue<Scalar> eval_Qc_by_recurrence(const GeronimusContext& ctx, int n, const Scalar& x)
{
  return evaluate(ctx.modified(), n, x);
}

/// Q^{c,N}_n = P_n + Lambda_n P_{n-1}, orthogonal for d nu_N.
template <typename Scalar>
MonicValue<Scalar> eval_QcN(const GeronimusContext& ctx, int n, const Scalar& x)
{
  if (n == 0)
    return evaluate(ctx.classical().coefficients, 0, x);
  const auto p = evaluate_pair(ctx.classical().coefficients, n, x);
  const double L = ctx.Lambda(n);
  return {p.current.value + L * p.previous.value, p.current.derivative + L * p.previous.derivative,
          p.current.second + L * p.previous.second};
}

/// Monic kernel polynomial P^{c,[1]}_n = (P_{n+1} - pi_n P_n) / (x - c); Taylor branch near c.
MonicValue<double> christoffel_kernel_poly(const GeronimusContext& ctx, int n, double x);

/// P^{c,[1]}_n from its own three-term recurrence.
template <typename Scalar>
MonicValue<Scalar> christoffel_kernel_poly_by_recurrence(const GeronimusContext& ctx, int n, const Scalar& x)
{
  return evaluate(ctx.christoffel(), n, x);
}

/// (Q^c_n + N B_n (x - c) P^{c,[1]}_{n-1}) / kappa_n.
MonicValue<double> eval_QcN_kernel_form(const GeronimusContext& ctx, int n, double x);

/// Kernel of d nu, Christoffel-Darboux form.
double kernel_c(const GeronimusContext& ctx, int n, double x, double y);
double kernel_c_by_sum(const GeronimusContext& ctx, int n, double x, double y);
/// K^c_n(c,c) from the confluent form.
double kernel_c_confluent(const GeronimusContext& ctx, int n);

struct ConnectionData {
  int n = 0;
  double pi_prev = 0.0;         ///< pi_{n-1}
  double r_prev = 0.0;          ///< r_{n-1}
  double kernel_diagonal = 0.0; ///< B^c_n
  double lambda = 0.0;          ///< Lambda^c_n(N)
  double kappa = 1.0;           ///< 1 + N B^c_n
  double value_at_shift = 0.0;  ///< Q^{c,N}_n(c)
};

ConnectionData connection_data(const GeronimusContext& ctx, int n);

/// Independent evaluations of the dual-formula quantities.
struct ConnectionAudit {
  double B_product = 0.0;    ///< -s Q^c_n(c) P_{n-1}(c) / ||P_{n-1}||^2
  double B_expanded = 0.0;   ///< s (r_{n-1} P_{n-1}(c)^2 - P_n(c) P_{n-1}(c)) / ||P_{n-1}||^2
  double B_confluent = 0.0;  ///< K^c_{n-1}(c,c)
  double lambda_direct = 0.0;
  double lambda_inverse = 0.0; ///< (1/(pi - r) - s N P_{n-1}(c)^2 / ||P_{n-1}||^2)^{-1} - pi
  double value_at_shift_direct = 0.0;  ///< evaluation of P_n + Lambda P_{n-1} at c
  double value_at_shift_kernel = 0.0;  ///< Q^c_n(c) / kappa_n
};

ConnectionAudit connection_audit(const GeronimusContext& ctx, int n);

/// (x - c)^2 P^{c,[1]}_n = Q^c_{n+2} - d Q^c_{n+1} + e Q^c_n.
struct KernelConnection {
  double d = 0.0;
  double e = 0.0;
  double e_minus_gamma = 0.0;    ///< e - gamma^c (coefficient of Q^c_n after reducing Q^c_{n+2})
  double e_minus_gamma_alt = 0.0; ///< Q^c_{n+1}(c)^2 / (||Q^c_n||^2 K^c_n(c,c))
};

KernelConnection kernel_connection_coeffs(const GeronimusContext& ctx, int n);

} // namespace geronimus
