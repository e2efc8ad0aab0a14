#pragma once

#include "geronimus/context.hpp"
#include "geronimus/quadrature.hpp"

#include <Eigen/Core>

#include <functional>

namespace geronimus {

/// Gauss rule of mu reweighted by 1 / |x - c|, i.e. a (non-Gaussian) rule for nu.
GaussRule shifted_rule(const GeronimusContext& ctx, int points = 200);

/// <f, g> for d nu_N = d mu / |x - c| + N delta_c.
double inner_product(const GeronimusContext& ctx, const GaussRule& rule, const std::function<double(double)>& f,
                     const std::function<double(double)>& g);

/// Monic orthogonal polynomials of nu_N by Gram-Schmidt on quadrature, degrees 0..n_max (<= 8).
/// Column k holds the ascending monomial coefficients of the degree-k polynomial.
Eigen::MatrixXd gram_schmidt_oracle(const GeronimusContext& ctx, int n_max, int points = 200);

/// Ascending monomial coefficients of P_n + Lambda_n P_{n-1}, degrees 0..n_max.
Eigen::MatrixXd connection_coefficients(const GeronimusContext& ctx, int n_max);

/// Largest coefficientwise relative difference; coefficients below 1e-12 of the column
/// maximum are compared against that maximum instead.
double coefficient_difference(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

/// N at which Q^{c,N}_n vanishes at the support endpoint nearest to c, by bisection in log N.
double minimum_mass_bisection(const GeronimusContext& ctx, int n);

/// F_n(c) by direct quadrature of P_n(x) / (x - c) against mu.
double second_kind_by_quadrature(const GeronimusContext& ctx, int n, int points = 200);

} // namespace geronimus
