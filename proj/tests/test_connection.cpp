#include <geronimus/connection.hpp>
#include <geronimus/context.hpp>
#include <geronimus/error.hpp>
#include <geronimus/oracles.hpp>
#include <geronimus/verify.hpp>

#include "stieltjes_oracle.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace geronimus;

namespace {

// nu_N discretized: Gauss rule of mu reweighted by 1/|x - c|, plus the point mass.
DiscreteRecurrence oracle_recurrence(const GeronimusContext& ctx, int n)
{
  const GaussRule rule = gauss_rule(ctx.spec(), 400);
  Eigen::VectorXd x(rule.nodes.size() + 1), w(rule.nodes.size() + 1);
  x.head(rule.nodes.size()) = rule.nodes;
  w.head(rule.nodes.size()) = rule.weights.array() / (rule.nodes.array() - ctx.c()).abs();
  x(rule.nodes.size()) = ctx.c();
  w(rule.nodes.size()) = ctx.mass();
  return discrete_stieltjes(x, w, n);
}

} // namespace

TEST_CASE("modified recurrence against a discretized Stieltjes oracle")
{
  for (const auto& [spec, c] : {std::pair{MeasureSpec::jacobi(0.5, 1.0), -1.5}, std::pair{MeasureSpec::jacobi(2.0, -0.5), 3.0},
                                std::pair{MeasureSpec::jacobi(0.0, 0.0), 1.5}}) {
    const GeronimusContext ctx(spec, c, 0.0, 12);
    const auto o = oracle_recurrence(ctx, 10);
    for (int k = 0; k < 10; ++k) {
      CHECK(ctx.modified().beta(k) == doctest::Approx(o.beta(k)).epsilon(1e-9));
      CHECK(ctx.modified().gamma(k) == doctest::Approx(o.gamma(k)).epsilon(1e-9));
    }
  }
}

TEST_CASE("Q^{c,N} zeros against a discretized oracle")
{
  const GeronimusContext base(MeasureSpec::jacobi(0.5, 1.0), -1.5, 0.0, 12);
  for (double N : {0.0, 0.05, 1.0, 100.0}) {
    const auto ctx = base.with_mass(N);
    const auto o = oracle_recurrence(ctx, 7);
    const Recurrence rec{o.beta, o.gamma};
    for (int n = 1; n <= 6; ++n) {
      const Eigen::VectorXd expect = jacobi_eigenvalues(rec, n);
      for (int k = 0; k < n; ++k) {
        const double x = expect(k);
        CHECK(std::abs(eval_QcN(ctx, n, x).value) <= 1e-8 * std::abs(eval_QcN(ctx, n, x).derivative));
      }
    }
  }
}

TEST_CASE("two routes to Q^c and the kernel polynomials")
{
  std::mt19937 rng(3);
  for (const auto& cell : default_grid()) {
    const GeronimusContext ctx(cell.spec, cell.c, 0.0, 15);
    std::uniform_real_distribution<double> u(cell.spec.lower(), cell.spec.family == Family::Laguerre ? 10.0 : 1.0);
    for (int n = 1; n <= 12; ++n) {
      const double x = u(rng);
      const double a = eval_Qc(ctx, n, x).value;
      const double b = eval_Qc_by_recurrence(ctx, n, x).value;
      const double scale = std::abs(eval_monic(ctx.classical(), n, x).value) + std::abs(ctx.r(n - 1) * eval_monic(ctx.classical(), n - 1, x).value);
      CHECK(std::abs(a - b) <= 1e-10 * scale);

      const double k1 = christoffel_kernel_poly(ctx, n, x).value;
      const double k2 = christoffel_kernel_poly_by_recurrence(ctx, n, x).value;
      CHECK(k1 == doctest::Approx(k2).epsilon(1e-8).scale(1.0));
    }
  }
}

TEST_CASE("kernel form and connection form of Q^{c,N} agree")
{
  std::mt19937 rng(5);
  for (const auto& cell : default_grid()) {
    const GeronimusContext base(cell.spec, cell.c, 0.0, 15);
    std::uniform_real_distribution<double> u(cell.spec.lower(), cell.spec.family == Family::Laguerre ? 10.0 : 1.0);
    for (double N : default_masses()) {
      const auto ctx = base.with_mass(N);
      for (int n = 1; n <= 12; ++n) {
        const double x = u(rng);
        const double a = eval_QcN(ctx, n, x).value;
        const double b = eval_QcN_kernel_form(ctx, n, x).value;
        const double scale = std::abs(eval_monic(ctx.classical(), n, x).value) +
                             std::abs(ctx.Lambda(n) * eval_monic(ctx.classical(), n - 1, x).value);
        CHECK(std::abs(a - b) <= 1e-9 * scale);
      }
    }
  }
}

TEST_CASE("connection audit")
{
  for (const auto& cell : default_grid()) {
    const GeronimusContext base(cell.spec, cell.c, 0.0, 20);
    for (double N : default_masses()) {
      const auto ctx = base.with_mass(N);
      for (int n = 1; n <= 20; ++n) {
        const auto d = connection_data(ctx, n);
        const auto a = connection_audit(ctx, n);
        CHECK(d.kernel_diagonal > 0.0);
        CHECK(a.B_product == doctest::Approx(d.kernel_diagonal).epsilon(1e-9));
        CHECK(a.B_expanded == doctest::Approx(d.kernel_diagonal).epsilon(1e-9));
        if (n <= 12)
          CHECK(a.B_confluent == doctest::Approx(d.kernel_diagonal).epsilon(1e-7));
        CHECK(a.lambda_direct == doctest::Approx(d.lambda).epsilon(1e-9));
        CHECK(a.lambda_inverse == doctest::Approx(d.lambda).epsilon(1e-8));
        // the direct evaluation cancels; its error scales with the two terms
        const double v = std::abs(eval_monic(ctx.classical(), n, cell.c).value) +
                         std::abs(d.lambda * eval_monic(ctx.classical(), n - 1, cell.c).value);
        CHECK(std::abs(a.value_at_shift_direct - a.value_at_shift_kernel) <= 1e-10 * v);
        CHECK(d.kappa == doctest::Approx(1.0 + N * d.kernel_diagonal));
      }
    }
  }
}

TEST_CASE("Lambda at zero mass is -r and tends to -pi")
{
  const GeronimusContext ctx(MeasureSpec::laguerre(0.0), -1.0, 0.0, 10);
  for (int n = 1; n <= 8; ++n) {
    CHECK(ctx.Lambda(n, 0.0) == doctest::Approx(-ctx.r(n - 1)));
    CHECK(ctx.Lambda(n, 1e12) == doctest::Approx(-ctx.pi(n - 1)).epsilon(1e-6));
  }
}

TEST_CASE("kernel of nu: sum, CD and confluent forms")
{
  const GeronimusContext ctx(MeasureSpec::jacobi(2.0, -0.5), 1.5, 0.0, 15);
  for (int n = 0; n <= 10; ++n) {
    CHECK(kernel_c(ctx, n, 0.2, -0.4) == doctest::Approx(kernel_c_by_sum(ctx, n, 0.2, -0.4)).epsilon(1e-10));
    CHECK(kernel_c_confluent(ctx, n) == doctest::Approx(kernel_c_by_sum(ctx, n, 1.5, 1.5)).epsilon(1e-10));
    CHECK(ctx.B(n + 1) == doctest::Approx(kernel_c_by_sum(ctx, n, 1.5, 1.5)).epsilon(1e-10));
  }
}

TEST_CASE("kernel connection coefficient is positive, two routes")
{
  for (const auto& cell : default_grid()) {
    const GeronimusContext ctx(cell.spec, cell.c, 0.0, 25);
    for (int n = 0; n <= 20; ++n) {
      const auto k = kernel_connection_coeffs(ctx, n);
      CHECK(k.e_minus_gamma > 0.0);
      CHECK(k.e_minus_gamma == doctest::Approx(k.e_minus_gamma_alt).epsilon(1e-7));
    }
  }
}

TEST_CASE("orthogonality of Q^{c,N} in the nu_N inner product")
{
  const GeronimusContext base(MeasureSpec::jacobi(0.0, 0.0), 1.5, 0.0, 10);
  const GaussRule rule = shifted_rule(base);
  for (double N : {0.0, 1.0}) {
    const auto ctx = base.with_mass(N);
    for (int n = 1; n <= 6; ++n)
      for (int j = 0; j < n; ++j) {
        const double ip = inner_product(ctx, rule, [&](double x) { return eval_QcN(ctx, n, x).value; },
                                        [&](double x) { return std::pow(x, j); });
        CHECK(std::abs(ip) <= 1e-11);
      }
  }
}

TEST_CASE("context guards")
{
  CHECK_THROWS_AS(GeronimusContext(MeasureSpec::laguerre(0.0), -1.0, -0.5), DomainError);
  CHECK_THROWS_AS(GeronimusContext(MeasureSpec::laguerre(0.0), 1.0, 0.0), ShiftInsideSupport);
  const GeronimusContext ctx(MeasureSpec::jacobi(0.0, 0.0), -1.5, 0.0, 8);
  CHECK(ctx.orientation() == 1);
  CHECK(ctx.near_endpoint() == -1.0);
  CHECK(GeronimusContext(MeasureSpec::jacobi(0.0, 0.0), 3.0, 0.0, 8).orientation() == -1);
  CHECK(ctx.with_mass(2.0).mass() == 2.0);
  CHECK(&ctx.with_mass(2.0).classical() == &ctx.classical());
}
