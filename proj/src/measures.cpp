#include "geronimus/measures.hpp"

#include "geronimus/error.hpp"

#include <cmath>
#include <sstream>

namespace geronimus {

MeasureSpec MeasureSpec::laguerre(double alpha)
{
  MeasureSpec spec{Family::Laguerre, alpha, 0.0};
  validate(spec);
  return spec;
}

MeasureSpec MeasureSpec::jacobi(double alpha, double beta)
{
  MeasureSpec spec{Family::Jacobi, alpha, beta};
  validate(spec);
  return spec;
}

double MeasureSpec::distance(double x) const
{
  if (x < lower())
    return lower() - x;
  if (x > upper())
    return x - upper();
  return 0.0;
}

std::string MeasureSpec::describe() const
{
  std::ostringstream os;
  if (family == Family::Laguerre)
    os << "laguerre(alpha=" << alpha << ")";
  else
    os << "jacobi(alpha=" << alpha << ", beta=" << beta << ")";
  return os.str();
}

void validate(const MeasureSpec& spec)
{
  if (!std::isfinite(spec.alpha) || spec.alpha <= -1.0)
    throw DomainError("alpha must satisfy alpha > -1 (got " + std::to_string(spec.alpha) + ")");
  if (spec.family == Family::Jacobi && (!std::isfinite(spec.beta) || spec.beta <= -1.0))
    throw DomainError("beta must satisfy beta > -1 (got " + std::to_string(spec.beta) + ")");
}

double recurrence_beta(const MeasureSpec& spec, int n)
{
  const double a = spec.alpha;
  if (spec.family == Family::Laguerre)
    return 2.0 * n + a + 1.0;
  const double b = spec.beta;
  if (n == 0)
    return (b - a) / (a + b + 2.0);
  const double s = 2.0 * n + a + b;
  return (b * b - a * a) / (s * (s + 2.0));
}

double recurrence_gamma(const MeasureSpec& spec, int n)
{
  const double a = spec.alpha;
  if (spec.family == Family::Laguerre)
    return n * (n + a);
  const double b = spec.beta;
  if (n == 1) {
    // the generic formula has a removable 0/0 at a + b = -1
    const double s = 2.0 + a + b;
    return 4.0 * (1.0 + a) * (1.0 + b) / (s * s * (s + 1.0));
  }
  const double s = 2.0 * n + a + b;
  return 4.0 * n * (n + a) * (n + b) * (n + a + b) / ((s - 1.0) * s * s * (s + 1.0));
}

double total_mass(const MeasureSpec& spec)
{
  if (spec.family == Family::Laguerre)
    return std::exp(std::lgamma(spec.alpha + 1.0));
  const double a = spec.alpha, b = spec.beta;
  return std::exp((a + b + 1.0) * std::log(2.0) + std::lgamma(a + 1.0) + std::lgamma(b + 1.0) -
                  std::lgamma(a + b + 2.0));
}

RecurrenceTable classical_recurrence(const MeasureSpec& spec, int n_max)
{
  validate(spec);
  if (n_max < 0)
    throw DomainError("n_max must be non-negative");
  RecurrenceTable table;
  table.mu0 = total_mass(spec);
  table.coefficients.beta.resize(n_max + 1);
  table.coefficients.gamma.resize(n_max + 1);
  table.norm_sq.resize(n_max + 1);
  table.coefficients.gamma(0) = table.mu0;
  table.norm_sq(0) = table.mu0;
  for (int n = 0; n <= n_max; ++n) {
    table.coefficients.beta(n) = recurrence_beta(spec, n);
    if (n > 0) {
      table.coefficients.gamma(n) = recurrence_gamma(spec, n);
      table.norm_sq(n) = table.norm_sq(n - 1) * table.coefficients.gamma(n);
    }
  }
  return table;
}

StructureRelation::StructureRelation(const MeasureSpec& spec) : spec_(spec) { validate(spec); }

Eigen::VectorXd StructureRelation::sigma() const
{
  if (spec_.family == Family::Laguerre)
    return Eigen::Vector2d(0.0, 1.0);
  return Eigen::Vector3d(1.0, 0.0, -1.0);
}

Eigen::VectorXd StructureRelation::a(int n) const
{
  if (n <= 0)
    return Eigen::VectorXd::Zero(2);
  if (spec_.family == Family::Laguerre)
    return Eigen::Vector2d(n, 0.0);
  const double s = 2.0 * n + spec_.alpha + spec_.beta;
  return Eigen::Vector2d(n * (spec_.alpha - spec_.beta) / s, -n);
}

Eigen::VectorXd StructureRelation::b(int n) const
{
  if (n <= 0)
    return Eigen::VectorXd::Zero(1);
  if (spec_.family == Family::Laguerre)
    return Eigen::VectorXd::Constant(1, n * (n + spec_.alpha));
  // b(n) = (2n + alpha + beta + 1) gamma_n
  const double s = 2.0 * n + spec_.alpha + spec_.beta;
  return Eigen::VectorXd::Constant(1, (s + 1.0) * recurrence_gamma(spec_, n));
}

MonicValue<double> eval_monic(const RecurrenceTable& table, int n, double x)
{
  return evaluate(table.coefficients, n, x);
}

namespace {

constexpr double kConfluentSwitch = 1e-8;

} // namespace

double kernel(const RecurrenceTable& table, int n, double x, double y)
{
  const auto px = evaluate_pair(table.coefficients, n + 1, x);
  if (std::abs(x - y) < kConfluentSwitch * (1.0 + std::abs(x))) {
    const double d = px.current.derivative * px.previous.value - px.previous.derivative * px.current.value;
    return d / table.norm_sq(n);
  }
  const auto py = evaluate_pair(table.coefficients, n + 1, y);
  const double num = px.current.value * py.previous.value - py.current.value * px.previous.value;
  return num / ((x - y) * table.norm_sq(n));
}

double kernel_by_sum(const RecurrenceTable& table, int n, double x, double y)
{
  double sum = 0.0;
  for (int k = 0; k <= n; ++k)
    sum += evaluate(table.coefficients, k, x).value * evaluate(table.coefficients, k, y).value / table.norm_sq(k);
  return sum;
}

} // namespace geronimus
