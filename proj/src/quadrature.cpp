#include "geronimus/quadrature.hpp"

#include "geronimus/error.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>

namespace geronimus {

GaussRule gauss_rule(const Recurrence& rec, int points)
{
  if (points < 1 || points > rec.max_degree())
    throw DomainError("gauss_rule: recurrence too short for the requested number of nodes");
  Eigen::VectorXd diag = rec.beta.head(points);
  Eigen::VectorXd sub(points - 1);
  for (int k = 1; k < points; ++k)
    sub(k - 1) = std::sqrt(rec.gamma(k));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success)
    throw NumericalFailure("gauss_rule: tridiagonal eigensolver did not converge");
  GaussRule rule;
  rule.nodes = solver.eigenvalues();
  rule.weights.resize(points);
  // w = 1 / sum_k phat_k(x)^2 over the orthonormal polynomials; relative accuracy survives
  // where the eigenvector components underflow
  constexpr double kRescale = 1e100;
  for (int i = 0; i < points; ++i) {
    const double x = rule.nodes(i);
    double prev = 0.0, cur = 1.0 / std::sqrt(rec.gamma(0));
    double sum = cur * cur, log_scale = 0.0;
    for (int k = 0; k + 1 < points; ++k) {
      const double next = ((x - rec.beta(k)) * cur - (k > 0 ? std::sqrt(rec.gamma(k)) * prev : 0.0)) /
                          std::sqrt(rec.gamma(k + 1));
      prev = cur;
      cur = next;
      if (std::abs(cur) > kRescale) {
        prev /= kRescale;
        cur /= kRescale;
        sum /= kRescale * kRescale;
        log_scale += 2.0 * std::log(kRescale);
      }
      sum += cur * cur;
    }
    rule.weights(i) = std::exp(-log_scale) / sum;
  }
  return rule;
}

GaussRule gauss_rule(const MeasureSpec& spec, int points)
{
  return gauss_rule(classical_recurrence(spec, points).coefficients, points);
}

} // namespace geronimus
