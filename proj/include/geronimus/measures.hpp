#pragma once

#include "geronimus/recurrence.hpp"

#include <Eigen/Core>

#include <limits>
#include <string>

namespace geronimus {

enum class Family { Laguerre, Jacobi };

/// Classical measure: Laguerre x^alpha e^{-x} on [0, inf) or Jacobi (1-x)^alpha (1+x)^beta on [-1, 1].
struct MeasureSpec {
  Family family = Family::Laguerre;
  double alpha = 0.0;
  double beta = 0.0; ///< Jacobi only

  static MeasureSpec laguerre(double alpha);
  static MeasureSpec jacobi(double alpha, double beta);

  double lower() const { return family == Family::Laguerre ? 0.0 : -1.0; }
  double upper() const { return family == Family::Laguerre ? std::numeric_limits<double>::infinity() : 1.0; }

  /// Distance from x to the support; zero inside it.
  double distance(double x) const;

  std::string describe() const;
};

/// Throws DomainError unless alpha > -1 (and beta > -1 for Jacobi).
void validate(const MeasureSpec& spec);

/// Closed-form recurrence coefficients of the monic family.
double recurrence_beta(const MeasureSpec& spec, int n);
double recurrence_gamma(const MeasureSpec& spec, int n); ///< n >= 1
double total_mass(const MeasureSpec& spec);

struct RecurrenceTable {
  Recurrence coefficients; ///< gamma(0) = mu0
  Eigen::VectorXd norm_sq; ///< ||P_n||^2; overflows to +inf for very high Laguerre degrees
  double mu0 = 0.0;

  int max_degree() const { return coefficients.max_degree(); }
  double beta(int n) const { return coefficients.beta(n); }
  double gamma(int n) const { return coefficients.gamma(n); }
};

/// beta_0..beta_{n_max}, gamma_0..gamma_{n_max} and the norms, so P_0..P_{n_max+1} are evaluable.
RecurrenceTable classical_recurrence(const MeasureSpec& spec, int n_max);

/// sigma(x) P_n' = a(x;n) P_n + b(x;n) P_{n-1}; polynomials as ascending coefficients.
class StructureRelation {
public:
  explicit StructureRelation(const MeasureSpec& spec);

  Eigen::VectorXd sigma() const;
  Eigen::VectorXd a(int n) const;
  Eigen::VectorXd b(int n) const;

  template <typename Scalar>
  Scalar sigma_at(const Scalar& x) const { return polyval(sigma(), x); }
  template <typename Scalar>
  Scalar a_at(int n, const Scalar& x) const { return polyval(a(n), x); }
  template <typename Scalar>
  Scalar b_at(int n, const Scalar& x) const { return polyval(b(n), x); }

private:
  MeasureSpec spec_;
};

/// P_n(x) and P_n'(x) (second derivative included).
MonicValue<double> eval_monic(const RecurrenceTable& table, int n, double x);

/// Christoffel-Darboux kernel K_n(x, y); switches to the confluent form when x and y nearly coincide.
double kernel(const RecurrenceTable& table, int n, double x, double y);

/// Direct sum over k <= n of P_k(x) P_k(y) / ||P_k||^2.
double kernel_by_sum(const RecurrenceTable& table, int n, double x, double y);

} // namespace geronimus
