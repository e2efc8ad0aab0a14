#pragma once

#include "geronimus/connection.hpp"
#include "geronimus/context.hpp"
#include "geronimus/error.hpp"

#include <Eigen/Core>

#include <vector>

namespace geronimus {

/// C1 carries b(x; n-1) (derived from the structure relation of P_{n-1}) or b(x; n).
enum class C1Variant { PreviousDegree, CurrentDegree };

template <typename Scalar>
struct LadderCoefficientSet {
  Scalar C1, D1, A2, B2, C2, D2, Delta;
  Scalar xi1, xi2, eta1, eta2;
};

/// Ladder coefficients of Q^{c,N}_n (n >= 2):
///   [Q_n]' = xi1 Q_n + eta1 Q_{n-1},   [Q_{n-1}]' = xi2 Q_n + eta2 Q_{n-1}.
template <typename Scalar>
LadderCoefficientSet<Scalar> ladder_coefficients(const GeronimusContext& ctx, int n, const Scalar& x,
                                                 C1Variant variant = C1Variant::PreviousDegree)
{
  if (n < 2)
    throw DomainError("ladder coefficients need n >= 2");
  const StructureRelation sr(ctx.spec());
  const double g = ctx.classical().gamma(n - 1);
  const double beta = ctx.classical().beta(n - 1);
  const double L = ctx.Lambda(n);
  const double Lm = ctx.Lambda(n - 1);

  const Scalar sigma = sr.sigma_at(x);
  const Scalar a_n = sr.a_at(n, x), a_m = sr.a_at(n - 1, x);
  const Scalar b_n = sr.b_at(n, x), b_m = sr.b_at(n - 1, x);
  const Scalar shift = x - beta;

  LadderCoefficientSet<Scalar> k;
  k.C1 = (a_n - L * (variant == C1Variant::PreviousDegree ? b_m : b_n) / g) / sigma;
  k.D1 = (b_n + L * (a_m + b_m * shift / g)) / sigma;
  k.A2 = Scalar(-Lm / g);
  k.B2 = 1.0 + Lm * shift / g;
  k.C2 = -(Lm * a_n / g + b_m * k.B2 / g) / sigma;
  k.D2 = (Lm * (sigma - b_n) / g + (a_m + b_m * shift / g) * k.B2) / sigma;
  k.Delta = k.B2 + L * Lm / g;
  k.xi1 = (k.C1 * k.B2 * g + k.D1 * Lm) / (k.Delta * g);
  k.xi2 = (k.C2 * k.B2 * g + k.D2 * Lm) / (k.Delta * g);
  k.eta1 = (k.D1 - k.C1 * L) / k.Delta;
  k.eta2 = (k.D2 - k.C2 * L) / k.Delta;
  return k;
}

/// Delta(x;n) as ascending degree-1 coefficients from the closed linear form.
Eigen::Vector2d delta_linear_form(const GeronimusContext& ctx, int n);
/// Delta(x;n) coefficients read off B2 + Lambda_n Lambda_{n-1} / gamma_{n-1}.
Eigen::Vector2d delta_from_ladder(const GeronimusContext& ctx, int n);

/// The C1 variant that satisfies [Q_n]' = C1 P_n + D1 P_{n-1} on sample points.
C1Variant select_c1_variant(const GeronimusContext& ctx, int n);

/// sigma (D1 - Lambda_n C1), the polynomial numerator of eta1 Delta.
double eta1_numerator(const GeronimusContext& ctx, int n, double x);

/// Chebyshev points over [a, min(b, a + 20)], avoiding 1e-8 neighbourhoods of the roots of
/// sigma, Delta and eta1.
std::vector<double> sample_points(const GeronimusContext& ctx, int n, int count = 100);

struct LadderResiduals {
  double lowering = 0.0;
  double raising = 0.0;
  double derivative_c1 = 0.0; ///< [Q_n]' = C1 P_n + D1 P_{n-1}
  double inversion = 0.0;     ///< reconstruction of P_n and P_{n-1} from Q_n, Q_{n-1}
  double lower_relation = 0.0; ///< Q_{n-1} = A2 P_n + B2 P_{n-1}
  double raising_relation = 0.0; ///< [Q_{n-1}]' = C2 P_n + D2 P_{n-1}
};

/// Scaled residuals of the ladder identities at x.
LadderResiduals ladder_residuals(const GeronimusContext& ctx, int n, double x,
                                 C1Variant variant = C1Variant::PreviousDegree);

} // namespace geronimus
