#pragma once

#include "geronimus/context.hpp"

#include <Eigen/Core>

#include <optional>

namespace geronimus {

struct OdeCoefficientSet {
  double R = 0.0;
  double S = 0.0;
  std::optional<double> R_closed; ///< closed form (Laguerre and Jacobi)
  std::optional<double> S_closed; ///< closed form (Laguerre)
  double u = 0.0;                 ///< u_L or u_J at x
  double z = 0.0;                 ///< real root of u
};

/// R, S of Q'' + R Q' + S Q = 0 for Q = Q^{c,N}_n from the ladder coefficients (n >= 2).
OdeCoefficientSet ode_coefficients(const GeronimusContext& ctx, int n, double x);

/// |Q'' + R Q' + S Q| / max(|Q''|, |R Q'|, |S Q|).
double ode_residual(const GeronimusContext& ctx, int n, double x);

/// u(x;n) with its derivative, and its real root.
struct ShortRange {
  double u = 0.0;
  double du = 0.0;
  double root = 0.0;
};

ShortRange short_range(const GeronimusContext& ctx, int n, double x);

struct ExternalPotential {
  double V = 0.0; ///< 1/2 ln u - 1/2 ln(weight with exponents raised by one)
  double u = 0.0;
  double z = 0.0;
};

/// Throws DomainError where u <= 0 or x is outside the interior of the support.
ExternalPotential external_potential(const GeronimusContext& ctx, int n, double x);

struct EquilibriumReport {
  Eigen::VectorXd zeros;
  Eigen::VectorXd residuals;      ///< explicit sum, relative to the largest term
  Eigen::VectorXd dual_residuals; ///< -1/2 (Q''/Q' + R) against the external field, same scale
  double max_residual() const;
};

/// Electrostatic equilibrium of the zeros of Q^{c,N}_n.
EquilibriumReport equilibrium_residual(const GeronimusContext& ctx, int n);

} // namespace geronimus
