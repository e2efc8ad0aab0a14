#include "geronimus/ladder.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace geronimus {

namespace {

double scaled(double lhs, std::initializer_list<double> terms)
{
  double scale = std::abs(lhs);
  double sum = lhs;
  for (double t : terms) {
    scale = std::max(scale, std::abs(t));
    sum -= t;
  }
  return scale > 0.0 ? std::abs(sum) / scale : 0.0;
}

} // namespace

Eigen::Vector2d delta_linear_form(const GeronimusContext& ctx, int n)
{
  const double g = ctx.classical().gamma(n - 1);
  const double beta = ctx.classical().beta(n - 1);
  const double L = ctx.Lambda(n), Lm = ctx.Lambda(n - 1);
  // (Lm / g) (x - beta + L + g / Lm)
  return Eigen::Vector2d((Lm / g) * (L - beta) + 1.0, Lm / g);
}

Eigen::Vector2d delta_from_ladder(const GeronimusContext& ctx, int n)
{
  // Delta is exactly linear: read it off at x = 0 and x = 1 from the B2 form
  const double g = ctx.classical().gamma(n - 1);
  const double beta = ctx.classical().beta(n - 1);
  const double L = ctx.Lambda(n), Lm = ctx.Lambda(n - 1);
  auto delta = [&](double x) { return 1.0 + Lm * (x - beta) / g + L * Lm / g; };
  const double d0 = delta(0.0);
  return Eigen::Vector2d(d0, delta(1.0) - d0);
}

double eta1_numerator(const GeronimusContext& ctx, int n, double x)
{
  const StructureRelation sr(ctx.spec());
  const double g = ctx.classical().gamma(n - 1);
  const double beta = ctx.classical().beta(n - 1);
  const double L = ctx.Lambda(n);
  const double sD1 = sr.b_at(n, x) + L * (sr.a_at(n - 1, x) + sr.b_at(n - 1, x) * (x - beta) / g);
  const double sC1 = sr.a_at(n, x) - L * sr.b_at(n - 1, x) / g;
  return sD1 - L * sC1;
}

std::vector<double> sample_points(const GeronimusContext& ctx, int n, int count)
{
  const double a = ctx.spec().lower();
  const double b = std::min(ctx.spec().upper(), a + 20.0);
  // eta1 numerator has degree <= 2: fit it through three points
  const double e0 = eta1_numerator(ctx, n, -1.0), e1 = eta1_numerator(ctx, n, 0.0), e2 = eta1_numerator(ctx, n, 1.0);
  const double qa = 0.5 * (e0 + e2) - e1, qb = 0.5 * (e2 - e0), qc = e1;
  std::vector<double> roots;
  if (std::abs(qa) > 1e-14 * (std::abs(qb) + std::abs(qc))) {
    const double disc = qb * qb - 4.0 * qa * qc;
    if (disc >= 0.0) {
      const double q = -0.5 * (qb + std::copysign(std::sqrt(disc), qb));
      roots.push_back(q / qa);
      if (q != 0.0)
        roots.push_back(qc / q);
    }
  } else if (qb != 0.0) {
    roots.push_back(-qc / qb);
  }
  const Eigen::Vector2d d = delta_linear_form(ctx, n);
  if (d(1) != 0.0)
    roots.push_back(-d(0) / d(1));

  std::vector<double> pts;
  for (int k = 0; k < count; ++k) {
    const double t = std::cos((2.0 * k + 1.0) * std::numbers::pi / (2.0 * count));
    const double x = 0.5 * (a + b) + 0.5 * (b - a) * t;
    const bool near = std::any_of(roots.begin(), roots.end(), [&](double r) { return std::abs(x - r) < 1e-8; });
    if (!near)
      pts.push_back(x);
  }
  std::sort(pts.begin(), pts.end());
  return pts;
}

C1Variant select_c1_variant(const GeronimusContext& ctx, int n)
{
  double worst_prev = 0.0, worst_cur = 0.0;
  for (double x : sample_points(ctx, n, 12)) {
    worst_prev = std::max(worst_prev, ladder_residuals(ctx, n, x, C1Variant::PreviousDegree).derivative_c1);
    worst_cur = std::max(worst_cur, ladder_residuals(ctx, n, x, C1Variant::CurrentDegree).derivative_c1);
  }
  return worst_prev <= worst_cur ? C1Variant::PreviousDegree : C1Variant::CurrentDegree;
}

LadderResiduals ladder_residuals(const GeronimusContext& ctx, int n, double x, C1Variant variant)
{
  const auto k = ladder_coefficients(ctx, n, x, variant);
  const auto p = evaluate_pair(ctx.classical().coefficients, n, x);
  const auto q = eval_QcN(ctx, n, x);
  const auto qm = eval_QcN(ctx, n - 1, x);
  const double Pn = p.current.value, Pm = p.previous.value;
  const double L = ctx.Lambda(n), Lm = ctx.Lambda(n - 1);
  const double g = ctx.classical().gamma(n - 1);

  LadderResiduals r;
  r.lowering = scaled(q.derivative, {k.xi1 * q.value, k.eta1 * qm.value});
  r.raising = scaled(qm.derivative, {k.xi2 * q.value, k.eta2 * qm.value});
  r.derivative_c1 = scaled(q.derivative, {k.C1 * Pn, k.D1 * Pm});
  r.lower_relation = scaled(qm.value, {k.A2 * Pn, k.B2 * Pm});
  r.raising_relation = scaled(qm.derivative, {k.C2 * Pn, k.D2 * Pm});
  const double rec_n = scaled(Pn * k.Delta, {k.B2 * q.value, -L * qm.value});
  const double rec_m = scaled(Pm * k.Delta, {Lm / g * q.value, qm.value});
  r.inversion = std::max(rec_n, rec_m);
  return r;
}

} // namespace geronimus
