#include <geronimus/connection.hpp>
#include <geronimus/error.hpp>
#include <geronimus/oracles.hpp>
#include <geronimus/reference.hpp>
#include <geronimus/verify.hpp>
#include <geronimus/zeros.hpp>

#include <doctest.h>

#include <cmath>

using namespace geronimus;

TEST_CASE("classical zeros")
{
  const GeronimusContext ctx(MeasureSpec::laguerre(0.0), -1.0, 0.0, 10);
  const auto z = zeros_classical(ctx, 3);
  CHECK(z.zeros(0) == doctest::Approx(0.415775).epsilon(1e-6));
  CHECK(z.zeros(2) == doctest::Approx(6.289945).epsilon(1e-6));
  CHECK(z.simple);
  CHECK(z.residuals.maxCoeff() < 1e-12);

  // Legendre P_2: +-1/sqrt(3)
  const GeronimusContext leg(MeasureSpec::jacobi(0.0, 0.0), 2.0, 0.0, 10);
  CHECK(zeros_classical(leg, 2).zeros(1) == doctest::Approx(1.0 / std::sqrt(3.0)));
}

TEST_CASE("zeros vanish on both evaluation routes")
{
  const GeronimusContext base(MeasureSpec::jacobi(0.5, 1.0), -1.5, 0.0, 20);
  for (double N : default_masses()) {
    const auto ctx = base.with_mass(N);
    for (int n = 1; n <= 15; ++n) {
      const auto z = zeros_geronimus(ctx, n);
      CHECK(z.simple);
      const Eigen::VectorXd anchored = anchored_zeros(ctx, n).zeros();
      for (int k = 0; k < n; ++k) {
        CHECK(std::abs(z.zeros(k) - anchored(k)) <= 1e-10 * (1.0 + std::abs(z.zeros(k))));
        const auto q = eval_QcN_kernel_form(ctx, n, z.zeros(k));
        CHECK(std::abs(q.value) <= 1e-9 * std::abs(q.derivative));
      }
    }
  }
}

TEST_CASE("interlacing verdicts on a few cells")
{
  for (const auto& cell : default_grid()) {
    const GeronimusContext base(cell.spec, cell.c, 0.0, 12);
    for (double N : {0.0, 0.05, 100.0})
      for (int n : {2, 5, 10}) {
        const auto v = interlacing_report(base.with_mass(N), n);
        CHECK(v.checks > 0);
        CHECK(v.ok());
      }
  }
}

TEST_CASE("limits: N -> infinity approaches c and the kernel zeros")
{
  const GeronimusContext base(MeasureSpec::laguerre(0.0), -1.0, 0.0, 10);
  const auto lim = limit_rates(base, 3);
  CHECK(lim.limits(0) == -1.0);
  CHECK(lim.limits(1) == doctest::Approx(0.869089).epsilon(1e-6));
  CHECK(lim.limits(2) == doctest::Approx(4.273768).epsilon(1e-6));

  const auto a = anchored_zeros(base.with_mass(1e8), 3);
  for (int k = 0; k < 3; ++k) {
    CHECK(a.anchors(k) == doctest::Approx(lim.limits(k)));
    CHECK(1e8 * a.offsets(k) == doctest::Approx(lim.rates(k)).epsilon(1e-6));
  }
}

TEST_CASE("minimum mass: closed form against bisection")
{
  const GeronimusContext lag(MeasureSpec::laguerre(0.0), -1.0, 0.0, 10);
  const double N0 = minimum_mass(lag, 3);
  CHECK(N0 > 0.0);
  CHECK(N0 == doctest::Approx(minimum_mass_bisection(lag, 3)).epsilon(1e-10));
  // the smallest zero sits on the endpoint
  CHECK(std::abs(eval_QcN(lag.with_mass(N0), 3, 0.0).value) <= 1e-10);
  CHECK(zeros_geronimus(lag.with_mass(N0 * 0.9), 3).zeros(0) > 0.0);
  CHECK(zeros_geronimus(lag.with_mass(N0 * 1.1), 3).zeros(0) < 0.0);

  const GeronimusContext jac(MeasureSpec::jacobi(2.0, -0.5), 3.0, 0.0, 10);
  CHECK(minimum_mass(jac, 4, Endpoint::Upper) == doctest::Approx(minimum_mass_bisection(jac, 4)).epsilon(1e-10));
  CHECK_THROWS_AS(minimum_mass(jac, 4, Endpoint::Lower), DomainError);
}

TEST_CASE("sweep")
{
  const GeronimusContext ctx(MeasureSpec::laguerre(0.0), -1.0, 0.0, 10);
  const auto t = sweep(ctx, 3, {0.0, 0.1, 1.0, 10.0, 1e3, 1e6});
  CHECK(t.all_monotone());
  for (int k = 0; k < 3; ++k)
    for (Eigen::Index i = 1; i < t.zeros.rows(); ++i)
      CHECK(t.zeros(i, k) < t.zeros(i - 1, k));

  CHECK_THROWS_AS(sweep(ctx, 3, {}), DomainError);
  CHECK_THROWS_AS(sweep(ctx, 3, {1.0, 0.5}), DomainError);
  CHECK_THROWS_AS(sweep(ctx, 3, {-1.0, 0.5}), DomainError);

  // c right of the support: zeros increase with N
  const GeronimusContext right(MeasureSpec::jacobi(0.0, 0.0), 1.5, 0.0, 10);
  const auto r = sweep(right, 4, {0.0, 1e-3, 1.0, 100.0});
  CHECK(r.all_monotone());
  CHECK(r.zeros(3, 3) > r.zeros(0, 3));
}

TEST_CASE("reference tables reproduce")
{
  for (int id : {1, 2}) {
    const auto t = compute_table(id);
    CHECK(table_deviation(t) <= reference_table(id).tolerance);
  }
  CHECK(compute_table(1).kernel_limits.size() == 2);
  CHECK_THROWS(reference_table(3));
}
