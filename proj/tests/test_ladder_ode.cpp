#include <geronimus/connection.hpp>
#include <geronimus/error.hpp>
#include <geronimus/ladder.hpp>
#include <geronimus/ode.hpp>
#include <geronimus/reference.hpp>
#include <geronimus/verify.hpp>

#include <doctest.h>

#include <cmath>

using namespace geronimus;

TEST_CASE("ladder identities on sample points")
{
  for (const auto& cell : default_grid()) {
    const GeronimusContext base(cell.spec, cell.c, 0.0, 12);
    for (double N : {0.0, 1.0}) {
      const auto ctx = base.with_mass(N);
      for (int n : {2, 3, 7, 10}) {
        CHECK(select_c1_variant(ctx, n) == C1Variant::PreviousDegree);
        for (double x : sample_points(ctx, n, 12)) {
          const auto r = ladder_residuals(ctx, n, x);
          CHECK(r.lowering < 1e-9);
          CHECK(r.raising < 1e-9);
          CHECK(r.derivative_c1 < 1e-9);
          CHECK(r.inversion < 1e-9);
          CHECK(r.lower_relation < 1e-9);
          CHECK(r.raising_relation < 1e-9);
        }
        const Eigen::Vector2d d1 = delta_linear_form(ctx, n), d2 = delta_from_ladder(ctx, n);
        CHECK(std::abs(d1(1) - d2(1)) <= 1e-12 * std::max(1.0, std::abs(d1(1))));
        CHECK(std::abs(d1(0) - d2(0)) <= 1e-10 * std::max(1.0, std::abs(d1(0))));
      }
    }
  }
}

TEST_CASE("ladder derivative matches a finite difference")
{
  const GeronimusContext ctx(MeasureSpec::laguerre(0.5), -1.0, 0.7, 10);
  const int n = 5;
  for (double x : {0.3, 1.7, 4.2}) {
    const auto k = ladder_coefficients(ctx, n, x);
    const double lhs = k.xi1 * eval_QcN(ctx, n, x).value + k.eta1 * eval_QcN(ctx, n - 1, x).value;
    const double h = 1e-5;
    const double fd = (eval_QcN(ctx, n, x + h).value - eval_QcN(ctx, n, x - h).value) / (2 * h);
    CHECK(lhs == doctest::Approx(fd).epsilon(1e-7));
  }
}

TEST_CASE("ladder needs n >= 2")
{
  const GeronimusContext ctx(MeasureSpec::laguerre(0.0), -1.0, 1.0, 5);
  CHECK_THROWS_AS(ladder_coefficients(ctx, 1, 0.5), DomainError);
}

TEST_CASE("holonomic equation and closed forms")
{
  for (const auto& cell : default_grid()) {
    const GeronimusContext base(cell.spec, cell.c, 0.0, 12);
    for (double N : {0.0, 0.05, 100.0}) {
      const auto ctx = base.with_mass(N);
      for (int n : {2, 4, 9}) {
        for (double x : sample_points(ctx, n, 10)) {
          CHECK(ode_residual(ctx, n, x) < 1e-8);
          const auto o = ode_coefficients(ctx, n, x);
          if (o.R_closed)
            CHECK(std::abs(o.R - *o.R_closed) <= 1e-9 * std::max(1.0, std::abs(o.R)));
          if (o.S_closed)
            CHECK(std::abs(o.S - *o.S_closed) <= 1e-9 * std::max(1.0, std::abs(o.S)));
        }
      }
    }
  }
}

TEST_CASE("short-range root matches the reference charge column")
{
  const auto& ref = reference_table(1);
  const GeronimusContext base(ref.spec, ref.c, 0.0, 10);
  for (std::size_t i = 0; i < ref.N_values.size(); ++i) {
    const auto s = short_range(base.with_mass(ref.N_values[i]), ref.n, 1.0);
    CHECK(s.root == doctest::Approx(ref.charge(i)).epsilon(5e-6).scale(1.0));
  }
}

TEST_CASE("electrostatic equilibrium")
{
  for (const auto& cell : default_grid()) {
    const GeronimusContext base(cell.spec, cell.c, 0.0, 16);
    for (double N : {0.0, 1.0})
      for (int n : {1, 3, 8, 15}) {
        const auto e = equilibrium_residual(base.with_mass(N), n);
        CHECK(e.zeros.size() == n);
        CHECK(e.max_residual() < 1e-6);
      }
  }
}

TEST_CASE("external potential outside the support")
{
  const GeronimusContext ctx(MeasureSpec::laguerre(0.0), -1.0, 1.0, 6);
  CHECK_NOTHROW(external_potential(ctx, 3, 1.0));
  CHECK_THROWS_AS(external_potential(ctx, 3, -0.5), DomainError);
}
