#include "geronimus/context.hpp"

#include "geronimus/error.hpp"

#include <cmath>
#include <sstream>

namespace geronimus {

namespace {

void require_mass(double N)
{
  if (!std::isfinite(N) || N < 0.0) {
    std::ostringstream os;
    os << "mass N must satisfy N >= 0 (got " << N << ")";
    throw DomainError(os.str());
  }
}

std::shared_ptr<const ShiftTables> build_tables(const MeasureSpec& spec, double c, int max_degree)
{
  validate(spec);
  require_outside_support(spec, c);
  if (max_degree < 1)
    throw DomainError("max_degree must be at least 1");

  auto t = std::make_shared<ShiftTables>();
  t->spec = spec;
  t->c = c;
  t->orientation = c < spec.lower() ? 1 : -1;
  t->max_degree = max_degree;
  const int D = max_degree;
  const double s = t->orientation;

  t->classical = classical_recurrence(spec, D + 4);
  t->second_kind = second_kind(spec, c, D + 3);
  const auto& cl = t->classical;
  const auto& sk = t->second_kind;

  // Q^c_n = P_n - r_{n-1} P_{n-1}
  t->modified.beta.resize(D + 3);
  t->modified.gamma.resize(D + 3);
  t->modified.beta(0) = cl.beta(0) + sk.r(0);
  t->modified.gamma(0) = s * sk.F(0);
  for (int k = 1; k < D + 3; ++k) {
    t->modified.beta(k) = cl.beta(k) + sk.r(k) - sk.r(k - 1);
    t->modified.gamma(k) = k == 1 ? -cl.mu0 * sk.r(0) / sk.F(0) : cl.gamma(k - 1) * sk.r(k - 1) / sk.r(k - 2);
  }
  t->modified_norm_sq.resize(D + 3);
  t->modified_norm_sq(0) = t->modified.gamma(0);
  for (int k = 1; k < D + 3; ++k)
    t->modified_norm_sq(k) = t->modified_norm_sq(k - 1) * t->modified.gamma(k);

  // pi_k = (c - beta_k) - gamma_k / pi_{k-1}
  t->pi.resize(D + 4);
  t->pi(0) = c - cl.beta(0);
  for (int k = 1; k < D + 4; ++k)
    t->pi(k) = (c - cl.beta(k)) - cl.gamma(k) / t->pi(k - 1);

  // monic kernel polynomials: orthogonal for |x - c| d mu
  t->christoffel.beta.resize(D + 2);
  t->christoffel.gamma.resize(D + 2);
  t->christoffel.gamma(0) = cl.mu0 * std::abs(cl.beta(0) - c);
  for (int k = 0; k < D + 2; ++k) {
    t->christoffel.beta(k) = cl.beta(k + 1) + t->pi(k + 1) - t->pi(k);
    if (k > 0)
      t->christoffel.gamma(k) = cl.gamma(k) * t->pi(k) / t->pi(k - 1);
  }

  // B_n = -s Q^c_n(c) P_{n-1}(c) / ||P_{n-1}||^2 with Q^c_n(c) = (pi_{n-1} - r_{n-1}) P_{n-1}(c)
  t->kernel_diagonal = Eigen::VectorXd::Zero(D + 3);
  double p_prev = 1.0; // P_{n-1}(c)
  for (int n = 1; n < D + 3; ++n) {
    const double ratio = p_prev * p_prev / cl.norm_sq(n - 1);
    t->kernel_diagonal(n) = -s * (t->pi(n - 1) - sk.r(n - 1)) * ratio;
    p_prev *= t->pi(n - 1);
  }
  return t;
}

} // namespace

GeronimusContext::GeronimusContext(const MeasureSpec& spec, double c, double N, int max_degree)
    : tables_(build_tables(spec, c, max_degree)), N_(N)
{
  require_mass(N);
}

GeronimusContext::GeronimusContext(std::shared_ptr<const ShiftTables> tables, double N)
    : tables_(std::move(tables)), N_(N)
{
  require_mass(N);
}

GeronimusContext GeronimusContext::with_mass(double N) const { return GeronimusContext(tables_, N); }

double GeronimusContext::B(int n) const
{
  if (n < 1 || n >= tables_->kernel_diagonal.size())
    throw DomainError("B_n requires 1 <= n <= max_degree + 2");
  return tables_->kernel_diagonal(n);
}

double GeronimusContext::Lambda(int n, double N) const
{
  require_mass(N);
  const double p = pi(n - 1);
  return (p - r(n - 1)) / (1.0 + N * B(n)) - p;
}

} // namespace geronimus
