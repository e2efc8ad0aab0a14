#pragma once

#include <Eigen/Core>
#include <Eigen/Eigenvalues>

#include <cassert>

namespace geronimus {

/// Coefficients of a monic three-term recurrence
///   x p_k(x) = p_{k+1}(x) + beta_k p_k(x) + gamma_k p_{k-1}(x),  p_{-1} = 0, p_0 = 1.
/// gamma(0) never enters the recurrence; by convention it holds the total mass of the
/// orthogonality measure.
struct Recurrence {
  Eigen::VectorXd beta;
  Eigen::VectorXd gamma;

  /// Highest degree n for which p_n can be evaluated.
  int max_degree() const { return static_cast<int>(beta.size()); }
};

template <typename Scalar>
struct MonicValue {
  Scalar value{0.0};
  Scalar derivative{0.0};
  Scalar second{0.0};
};

/// p_n together with p_{n-1}, both with first and second derivatives.
template <typename Scalar>
struct MonicPair {
  MonicValue<Scalar> current;
  MonicValue<Scalar> previous;
};

/// Forward evaluation of the recurrence and of its first two x-derivatives.
template <typename Scalar>
MonicPair<Scalar> evaluate_pair(const Recurrence& rec, int n, const Scalar& x)
{
  assert(n >= 0 && n <= rec.max_degree());
  MonicValue<Scalar> prev{Scalar(0.0), Scalar(0.0), Scalar(0.0)};
  MonicValue<Scalar> cur{Scalar(1.0), Scalar(0.0), Scalar(0.0)};
  for (int k = 0; k < n; ++k) {
    const Scalar shift = x - rec.beta(k);
    const double g = k > 0 ? rec.gamma(k) : 0.0;
    MonicValue<Scalar> next;
    next.value = shift * cur.value - g * prev.value;
    next.derivative = cur.value + shift * cur.derivative - g * prev.derivative;
    next.second = 2.0 * cur.derivative + shift * cur.second - g * prev.second;
    prev = cur;
    cur = next;
  }
  return {cur, prev};
}

template <typename Scalar>
MonicValue<Scalar> evaluate(const Recurrence& rec, int n, const Scalar& x)
{
  return evaluate_pair(rec, n, x).current;
}

/// Zeros of p_n: eigenvalues of the symmetric n x n Jacobi matrix, optionally with the
/// last diagonal entry replaced by beta_{n-1} + last_diagonal_shift.
inline Eigen::VectorXd jacobi_eigenvalues(const Recurrence& rec, int n, double last_diagonal_shift = 0.0)
{
  assert(n >= 1 && n <= rec.max_degree());
  Eigen::VectorXd diag = rec.beta.head(n);
  diag(n - 1) += last_diagonal_shift;
  Eigen::VectorXd sub(n > 1 ? n - 1 : 0);
  for (int k = 1; k < n; ++k)
    sub(k - 1) = std::sqrt(rec.gamma(k));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

/// Ascending monomial coefficients of p_0..p_n.
inline Eigen::MatrixXd monomial_coefficients(const Recurrence& rec, int n)
{
  Eigen::MatrixXd coeffs = Eigen::MatrixXd::Zero(n + 1, n + 1);
  coeffs(0, 0) = 1.0;
  for (int k = 0; k < n; ++k) {
    // p_{k+1} = (x - beta_k) p_k - gamma_k p_{k-1}
    coeffs.col(k + 1).tail(n).noalias() = coeffs.col(k).head(n);
    coeffs.col(k + 1) -= rec.beta(k) * coeffs.col(k);
    if (k > 0)
      coeffs.col(k + 1) -= rec.gamma(k) * coeffs.col(k - 1);
  }
  return coeffs;
}

/// Horner evaluation of ascending coefficients.
template <typename Scalar, typename Derived>
Scalar polyval(const Eigen::MatrixBase<Derived>& coeffs, const Scalar& x)
{
  Scalar acc(0.0);
  for (Eigen::Index k = coeffs.size() - 1; k >= 0; --k)
    acc = acc * x + coeffs(k);
  return acc;
}

} // namespace geronimus
