#include "geronimus/oracles.hpp"

#include "geronimus/connection.hpp"
#include "geronimus/error.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

#include <cmath>

namespace geronimus {

namespace {

constexpr int kOracleMaxDegree = 8;
constexpr double kMaxCondition = 1e12;

} // namespace

GaussRule shifted_rule(const GeronimusContext& ctx, int points)
{
  GaussRule rule = gauss_rule(ctx.spec(), points);
  for (Eigen::Index i = 0; i < rule.nodes.size(); ++i)
    rule.weights(i) /= std::abs(rule.nodes(i) - ctx.c());
  return rule;
}

double inner_product(const GeronimusContext& ctx, const GaussRule& rule, const std::function<double(double)>& f,
                     const std::function<double(double)>& g)
{
  const double c = ctx.c();
  return rule.integrate([&](double x) { return f(x) * g(x); }) + ctx.mass() * f(c) * g(c);
}

Eigen::MatrixXd gram_schmidt_oracle(const GeronimusContext& ctx, int n_max, int points)
{
  if (n_max < 0 || n_max > kOracleMaxDegree)
    throw DomainError("gram_schmidt_oracle: degree must be in 0..8");
  const auto& cl = ctx.classical();
  const int m = n_max + 1;
  const GaussRule rule = shifted_rule(ctx, points);

  // Two candidate bases, both with their change of basis to P_k:
  //   phi_k = P_k / ||P_k||_mu, well conditioned for small masses;
  //   b_0 = 1, b_k = (x - c) P_{k-1} / ||P_{k-1}||_mu, where the point mass only touches b_0.
  const double c = ctx.c();
  const Eigen::Index q = rule.nodes.size();
  Eigen::VectorXd sqrt_w(q + 1);
  for (Eigen::Index i = 0; i < q; ++i)
    sqrt_w(i) = std::sqrt(rule.weights(i));
  sqrt_w(q) = std::sqrt(ctx.mass());

  Eigen::MatrixXd A_phi(q + 1, m), A_b(q + 1, m);
  for (Eigen::Index i = 0; i <= q; ++i) {
    const double x = i == q ? c : rule.nodes(i);
    A_b(i, 0) = sqrt_w(i);
    for (int k = 0; k < m; ++k) {
      const double phi = evaluate(cl.coefficients, k, x).value / std::sqrt(cl.norm_sq(k));
      A_phi(i, k) = sqrt_w(i) * phi;
      if (k + 1 < m)
        A_b(i, k + 1) = sqrt_w(i) * (x - c) * phi;
    }
  }
  Eigen::MatrixXd T_phi = Eigen::MatrixXd::Zero(m, m), T_b = Eigen::MatrixXd::Zero(m, m);
  T_b(0, 0) = 1.0;
  for (int k = 0; k < m; ++k) {
    const double s = 1.0 / std::sqrt(cl.norm_sq(k));
    T_phi(k, k) = s;
    // (x - c) P_k = P_{k+1} + (beta_k - c) P_k + gamma_k P_{k-1}
    if (k + 1 < m) {
      T_b(k + 1, k + 1) = s;
      T_b(k, k + 1) = (cl.beta(k) - c) * s;
      if (k > 0)
        T_b(k - 1, k + 1) = cl.gamma(k) * s;
    }
  }
  auto condition = [](const Eigen::MatrixXd& A) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(A);
    const auto& sv = svd.singularValues();
    return sv(0) / sv(sv.size() - 1);
  };
  const double cond_phi = condition(A_phi), cond_b = condition(A_b);
  const bool use_phi = cond_phi <= cond_b;
  const double cond = std::min(cond_phi, cond_b);
  if (!std::isfinite(cond) || cond * cond > kMaxCondition)
    throw NumericalFailure("gram_schmidt_oracle: Gram matrix condition number exceeds 1e12");

  // QR of the weighted sample matrix is Gram-Schmidt in the discrete inner product
  const Eigen::MatrixXd& A = use_phi ? A_phi : A_b;
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(A);
  const Eigen::MatrixXd R = qr.matrixQR().topRows(m).triangularView<Eigen::Upper>();
  const Eigen::MatrixXd U = R.triangularView<Eigen::Upper>().solve(Eigen::MatrixXd::Identity(m, m));
  Eigen::MatrixXd P = (use_phi ? T_phi : T_b) * U;
  for (int k = 0; k < m; ++k)
    P.col(k) /= P(k, k);
  return monomial_coefficients(cl.coefficients, n_max) * P;
}

Eigen::MatrixXd connection_coefficients(const GeronimusContext& ctx, int n_max)
{
  const int m = n_max + 1;
  Eigen::MatrixXd P = Eigen::MatrixXd::Zero(m, m);
  P(0, 0) = 1.0;
  for (int k = 1; k < m; ++k) {
    P(k, k) = 1.0;
    P(k - 1, k) = ctx.Lambda(k);
  }
  return monomial_coefficients(ctx.classical().coefficients, n_max) * P;
}

double coefficient_difference(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b)
{
  double worst = 0.0;
  for (Eigen::Index k = 0; k < b.cols(); ++k) {
    const double top = b.col(k).cwiseAbs().maxCoeff();
    for (Eigen::Index j = 0; j < b.rows(); ++j) {
      const double ref = std::max(std::abs(b(j, k)), 1e-12 * top);
      if (ref == 0.0)
        continue;
      worst = std::max(worst, std::abs(a(j, k) - b(j, k)) / ref);
    }
  }
  return worst;
}

double minimum_mass_bisection(const GeronimusContext& ctx, int n)
{
  const double e = ctx.near_endpoint();
  if (!std::isfinite(e))
    throw DomainError("minimum mass needs a finite endpoint");
  const auto p = evaluate_pair(ctx.classical().coefficients, n, e);
  auto value = [&](double N) { return p.current.value + ctx.Lambda(n, N) * p.previous.value; };

  double lo = 1e-8, hi = 1e3;
  const double s0 = value(0.0);
  int guard = 0;
  while ((value(lo) > 0.0) != (s0 > 0.0) && guard++ < 400)
    lo *= 1e-4;
  guard = 0;
  while ((value(hi) > 0.0) == (s0 > 0.0) && guard++ < 400)
    hi *= 1e4;
  if ((value(lo) > 0.0) != (s0 > 0.0) || (value(hi) > 0.0) == (s0 > 0.0))
    throw NumericalFailure("minimum_mass_bisection: no sign change found");
  for (int it = 0; it < 200 && hi / lo - 1.0 > 1e-15; ++it) {
    const double mid = std::sqrt(lo) * std::sqrt(hi);
    if ((value(mid) > 0.0) == (s0 > 0.0))
      lo = mid;
    else
      hi = mid;
  }
  return std::sqrt(lo) * std::sqrt(hi);
}

double second_kind_by_quadrature(const GeronimusContext& ctx, int n, int points)
{
  const GaussRule rule = gauss_rule(ctx.spec(), points);
  const double c = ctx.c();
  return rule.integrate([&](double x) { return evaluate(ctx.classical().coefficients, n, x).value / (x - c); });
}

} // namespace geronimus
