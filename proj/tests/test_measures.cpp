#include <geronimus/measures.hpp>
#include <geronimus/quadrature.hpp>
#include <geronimus/error.hpp>

#include <doctest.h>

#include <cmath>
#include <random>

using namespace geronimus;

TEST_CASE("classical recurrence coefficients")
{
  const auto lag = MeasureSpec::laguerre(0.5);
  CHECK(recurrence_beta(lag, 3) == doctest::Approx(7.5));
  CHECK(recurrence_gamma(lag, 3) == doctest::Approx(10.5));
  CHECK(total_mass(lag) == doctest::Approx(std::tgamma(1.5)));

  const auto jac = MeasureSpec::jacobi(0.5, 1.0);
  CHECK(recurrence_beta(jac, 1) == doctest::Approx(0.0389610).epsilon(1e-6));
  // mass = 2^{a+b+1} Gamma(a+1) Gamma(b+1) / Gamma(a+b+2)
  CHECK(total_mass(jac) == doctest::Approx(std::pow(2.0, 2.5) * std::tgamma(1.5) * std::tgamma(2.0) / std::tgamma(3.5)));

  const auto leg = MeasureSpec::jacobi(0.0, 0.0);
  for (int n = 1; n < 6; ++n)
    CHECK(recurrence_gamma(leg, n) == doctest::Approx(n * n / (4.0 * n * n - 1.0)));
}

TEST_CASE("monic values")
{
  const auto lag = classical_recurrence(MeasureSpec::laguerre(0.0), 6);
  CHECK(eval_monic(lag, 2, 0.0).value == doctest::Approx(2.0));
  CHECK(eval_monic(lag, 2, 1.0).value == doctest::Approx(-1.0)); // x^2 - 4x + 2

  const auto leg = classical_recurrence(MeasureSpec::jacobi(0.0, 0.0), 6);
  CHECK(eval_monic(leg, 2, 1.0).value == doctest::Approx(2.0 / 3.0));
  CHECK(eval_monic(leg, 3, 0.5).derivative == doctest::Approx(3 * 0.25 - 0.6));
}

TEST_CASE("invalid parameters")
{
  CHECK_THROWS_AS(validate(MeasureSpec::laguerre(-1.0)), DomainError);
  CHECK_THROWS_AS(validate(MeasureSpec::jacobi(0.0, -1.5)), DomainError);
  CHECK_NOTHROW(validate(MeasureSpec::jacobi(-0.5, 2.0)));
}

TEST_CASE("kernel: symmetry and sum form")
{
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-0.9, 0.9);
  const auto tab = classical_recurrence(MeasureSpec::jacobi(0.5, 1.0), 20);
  for (int trial = 0; trial < 50; ++trial) {
    const double x = u(rng), y = u(rng);
    const int n = 1 + trial % 15;
    const double k = kernel(tab, n, x, y);
    CHECK(k == doctest::Approx(kernel(tab, n, y, x)).epsilon(1e-12));
    CHECK(k == doctest::Approx(kernel_by_sum(tab, n, x, y)).epsilon(1e-9));
  }
  CHECK(kernel(tab, 6, 0.3, 0.3) == doctest::Approx(kernel_by_sum(tab, 6, 0.3, 0.3)).epsilon(1e-11));
}

TEST_CASE("structure relation")
{
  std::mt19937 rng(11);
  for (const auto& spec : {MeasureSpec::laguerre(0.5), MeasureSpec::jacobi(2.0, -0.5)}) {
    const auto tab = classical_recurrence(spec, 20);
    const StructureRelation sr(spec);
    std::uniform_real_distribution<double> u(spec.lower() + 0.01, spec.family == Family::Laguerre ? 15.0 : 0.99);
    for (int n = 1; n <= 15; ++n) {
      const double x = u(rng);
      const auto p = eval_monic(tab, n, x);
      const auto q = eval_monic(tab, n - 1, x);
      const double lhs = sr.sigma_at(x) * p.derivative;
      const double rhs = sr.a_at(n, x) * p.value + sr.b_at(n, x) * q.value;
      const double scale = std::abs(sr.a_at(n, x) * p.value) + std::abs(sr.b_at(n, x) * q.value);
      CHECK(std::abs(lhs - rhs) <= 1e-12 * scale);
    }
  }
}

TEST_CASE("gauss rules")
{
  const auto rule = gauss_rule(MeasureSpec::laguerre(0.0), 3);
  CHECK(rule.nodes(0) == doctest::Approx(0.415775).epsilon(1e-6));
  CHECK(rule.nodes(1) == doctest::Approx(2.294280).epsilon(1e-6));
  CHECK(rule.nodes(2) == doctest::Approx(6.289945).epsilon(1e-6));

  // moments x^k: Gamma(alpha + k + 1) for Laguerre
  const auto big = gauss_rule(MeasureSpec::laguerre(0.5), 40);
  for (int k = 0; k < 30; ++k) {
    const double m = big.integrate([k](double x) { return std::pow(x, k); });
    CHECK(m == doctest::Approx(std::tgamma(k + 1.5)).epsilon(1e-10));
  }
  // Legendre: \int x^{2k} = 2 / (2k + 1)
  const auto leg = gauss_rule(MeasureSpec::jacobi(0.0, 0.0), 12);
  for (int k = 0; k < 12; ++k)
    CHECK(leg.integrate([k](double x) { return std::pow(x, 2 * k); }) == doctest::Approx(2.0 / (2 * k + 1)).epsilon(1e-13));
}
