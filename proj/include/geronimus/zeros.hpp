#pragma once

#include "geronimus/context.hpp"

#include <Eigen/Core>

#include <string>
#include <vector>

namespace geronimus {

struct ZeroReport {
  int n = 0;
  std::string family;        ///< "P", "Qc", "P1" (kernel polynomial) or "QcN"
  Eigen::VectorXd zeros;     ///< ascending
  Eigen::VectorXd residuals; ///< |p(z)| over the local scale of p
  bool simple = true;        ///< false when two zeros agree within 1e-13
};

/// Zeros of p_n from the Jacobi matrix of `rec`, Newton-polished on the recurrence.
ZeroReport zeros_orthogonal(const Recurrence& rec, int n, const std::string& family = "P");

ZeroReport zeros_classical(const GeronimusContext& ctx, int n);
ZeroReport zeros_modified(const GeronimusContext& ctx, int n);
ZeroReport zeros_kernel(const GeronimusContext& ctx, int n);

/// Zeros of Q^{c,N}_n = P_n + Lambda_n P_{n-1} at the context mass.
ZeroReport zeros_geronimus(const GeronimusContext& ctx, int n);

/// Zeros of Q^{c,N}_n as anchor + offset. The anchors are c and the zeros of P^{c,[1]}_{n-1}
/// (the N -> infinity limits); the offsets stay resolvable when they drop far below the
/// spacing of doubles near the anchors.
struct AnchoredZeros {
  Eigen::VectorXd anchors;    ///< zeta_k, ascending
  Eigen::VectorXd offsets;    ///< y^{c,N}_k - zeta_k
  Eigen::VectorXd at_zero_mass; ///< y^c_k - zeta_k

  Eigen::VectorXd zeros() const { return anchors + offsets; }
};

AnchoredZeros anchored_zeros(const GeronimusContext& ctx, int n);

/// Roots of h + C g with g = prod_j (x - anchors_j), each bracketed by anchors_k and
/// anchors_k + gaps_k where h(anchors_k + gaps_k) = 0. Returns the offsets.
template <typename H>
Eigen::VectorXd interlaced_offsets(H&& h, double C, const Eigen::VectorXd& anchors, const Eigen::VectorXd& gaps);

struct InterlacingVerdict {
  int checks = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Kernel-polynomial interlacing, the zero chain at the context mass, the sign
/// relation between kernel polynomials and Q^c, and the at-most-one-outside rule.
InterlacingVerdict interlacing_report(const GeronimusContext& ctx, int n);

struct LimitRates {
  Eigen::VectorXd limits; ///< ascending, one per zero of Q^{c,N}_n
  Eigen::VectorXd rates;  ///< lim N (y^{c,N}_k - limit_k)
};

LimitRates limit_rates(const GeronimusContext& ctx, int n);

enum class Endpoint { Lower, Upper };

/// Closed-form mass at which the extreme zero reaches the support endpoint.
double minimum_mass(const GeronimusContext& ctx, int n, Endpoint endpoint);
double minimum_mass(const GeronimusContext& ctx, int n);

struct SweepTrajectory {
  int n = 0;
  std::vector<double> N_values;
  Eigen::MatrixXd zeros;   ///< row per N
  Eigen::MatrixXd offsets; ///< zeros - limits, exact even when not resolvable in `zeros`
  LimitRates limits;
  std::vector<bool> monotone; ///< per zero column, in the direction fixed by the side of c
  bool all_monotone() const;
};

/// Zeros of Q^{c,N}_n over an ascending list of masses.
SweepTrajectory sweep(const GeronimusContext& ctx, int n, const std::vector<double>& N_values);

} // namespace geronimus

#include "geronimus/zeros_impl.hpp"
