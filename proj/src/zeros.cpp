#include "geronimus/zeros.hpp"

#include "geronimus/connection.hpp"
#include "geronimus/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace geronimus {

namespace {

constexpr double kTieTolerance = 1e-13;
constexpr double kChainSlack = 1e-12;

template <typename Eval>
ZeroReport polish(Eigen::VectorXd z, int n, const std::string& family, Eval&& eval)
{
  ZeroReport report;
  report.n = n;
  report.family = family;
  report.residuals.resize(z.size());
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    auto v = eval(z(i));
    for (int it = 0; it < 3 && v.value != 0.0 && v.derivative != 0.0; ++it) {
      const double x = z(i) - v.value / v.derivative;
      const auto w = eval(x);
      if (!(std::abs(w.value) < std::abs(v.value)))
        break;
      z(i) = x;
      v = w;
    }
    report.residuals(i) = std::abs(v.value) / std::max(v.scale, std::numeric_limits<double>::min());
  }
  std::sort(z.data(), z.data() + z.size());
  for (Eigen::Index i = 1; i < z.size(); ++i)
    if (z(i) - z(i - 1) <= kTieTolerance * (1.0 + std::abs(z(i))))
      report.simple = false;
  report.zeros = std::move(z);
  return report;
}

struct Scaled {
  double value;
  double derivative;
  double scale;
};

// local scale of a monic p_n at x: product of |x - z| would need the zeros; use the
// magnitude of the two recurrence terms instead
Scaled scaled_recurrence(const Recurrence& rec, int n, double x)
{
  const auto p = evaluate_pair(rec, n, x);
  const double shift = n > 0 ? std::abs((x - rec.beta(n - 1)) * p.previous.value) : 1.0;
  const double back = n > 1 ? std::abs(rec.gamma(n - 1) * evaluate(rec, n - 2, x).value) : 0.0;
  return {p.current.value, p.current.derivative, std::max(shift + back, std::abs(p.current.value))};
}

void require_n(const GeronimusContext& ctx, int n)
{
  if (n < 1 || n > ctx.max_degree())
    throw DomainError("degree " + std::to_string(n) + " outside 1.." + std::to_string(ctx.max_degree()));
}

std::string fmt(double v)
{
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

} // namespace

ZeroReport zeros_orthogonal(const Recurrence& rec, int n, const std::string& family)
{
  if (n < 0 || n > rec.max_degree())
    throw DomainError("zeros_orthogonal: degree out of range");
  if (n == 0)
    return ZeroReport{0, family, Eigen::VectorXd(), Eigen::VectorXd(), true};
  for (int k = 1; k < n; ++k)
    if (!(rec.gamma(k) > 0.0))
      throw NumericalFailure("zeros_orthogonal: nonpositive recurrence coefficient");
  return polish(jacobi_eigenvalues(rec, n), n, family, [&](double x) { return scaled_recurrence(rec, n, x); });
}

ZeroReport zeros_classical(const GeronimusContext& ctx, int n)
{
  return zeros_orthogonal(ctx.classical().coefficients, n, "P");
}

ZeroReport zeros_modified(const GeronimusContext& ctx, int n) { return zeros_orthogonal(ctx.modified(), n, "Qc"); }

ZeroReport zeros_kernel(const GeronimusContext& ctx, int n) { return zeros_orthogonal(ctx.christoffel(), n, "P1"); }

ZeroReport zeros_geronimus(const GeronimusContext& ctx, int n)
{
  require_n(ctx, n);
  const auto& rec = ctx.classical().coefficients;
  const double L = ctx.Lambda(n);
  Eigen::VectorXd z = jacobi_eigenvalues(rec, n, -L);
  return polish(std::move(z), n, "QcN", [&](double x) {
    const auto p = evaluate_pair(rec, n, x);
    return Scaled{p.current.value + L * p.previous.value, p.current.derivative + L * p.previous.derivative,
                  std::abs(p.current.value) + std::abs(L * p.previous.value)};
  });
}

AnchoredZeros anchored_zeros(const GeronimusContext& ctx, int n)
{
  require_n(ctx, n);
  AnchoredZeros out;
  out.anchors.resize(n);
  const Eigen::VectorXd kernel_zeros = zeros_kernel(ctx, n - 1).zeros;
  if (ctx.orientation() > 0) {
    out.anchors(0) = ctx.c();
    out.anchors.tail(n - 1) = kernel_zeros;
  } else {
    out.anchors.head(n - 1) = kernel_zeros;
    out.anchors(n - 1) = ctx.c();
  }
  out.at_zero_mass = zeros_modified(ctx, n).zeros - out.anchors;
  const double C = ctx.mass() * ctx.B(n);
  out.offsets = interlaced_offsets([&](double x) { return eval_Qc(ctx, n, x); }, C, out.anchors, out.at_zero_mass);
  return out;
}

InterlacingVerdict interlacing_report(const GeronimusContext& ctx, int n)
{
  require_n(ctx, n);
  InterlacingVerdict v;
  auto strict = [&](double lo, double hi, const std::string& what) {
    ++v.checks;
    if (!(hi - lo > kChainSlack * (1.0 + std::max(std::abs(lo), std::abs(hi)))))
      v.violations.push_back(what + ": " + fmt(lo) + " !< " + fmt(hi));
  };
  const int s = ctx.orientation();
  const Eigen::VectorXd yc = zeros_modified(ctx, n).zeros;
  const Eigen::VectorXd x1 = zeros_kernel(ctx, n - 1).zeros;

  // degree n - 1 kernel polynomial against Q^c_n
  for (int k = 0; k < n - 1; ++k) {
    strict(yc(k), x1(k), "Qc/P1 interlacing at k=" + std::to_string(k + 1));
    strict(x1(k), yc(k + 1), "P1/Qc interlacing at k=" + std::to_string(k + 1));
  }
  // sign(P^{c,[1]}_{n-1}) = sign(Q^c_{n-1}) at the zeros of Q^c_n
  for (int k = 0; k < n; ++k) {
    ++v.checks;
    const double a = christoffel_kernel_poly_by_recurrence(ctx, n - 1, yc(k)).value;
    const double b = eval_Qc(ctx, n - 1, yc(k)).value;
    if (!((a > 0.0) == (b > 0.0)) || a == 0.0 || b == 0.0)
      v.violations.push_back("sign relation at y^c_" + std::to_string(k + 1));
  }

  // zero chain between c, the kernel zeros and Q^c_n, with offsets from the N -> infinity limits
  const AnchoredZeros az = anchored_zeros(ctx, n);
  for (int k = 0; k < n; ++k) {
    const double w = az.at_zero_mass(k);
    ++v.checks;
    if (!(s * w > 0.0))
      v.violations.push_back("limit and y^c out of order at k=" + std::to_string(k + 1));
    if (ctx.mass() > 0.0) {
      const double t = az.offsets(k) / w;
      ++v.checks;
      if (!(t > 0.0 && t < 1.0 - kChainSlack))
        v.violations.push_back("y^{c,N} not strictly between limit and y^c at k=" + std::to_string(k + 1) +
                               " (ratio " + fmt(t) + ")");
    }
  }
  // separation of consecutive blocks: y^c_k < zeta_{k+1} (left shift) or zeta_{k} < y^c_{k+1} (right)
  for (int k = 0; k + 1 < n; ++k) {
    if (s > 0)
      strict(yc(k), az.anchors(k + 1), "chain y^c < next limit at k=" + std::to_string(k + 1));
    else
      strict(az.anchors(k), yc(k + 1), "chain limit < next y^c at k=" + std::to_string(k + 1));
  }
  // eigen path against the anchored path
  const ZeroReport direct = zeros_geronimus(ctx, n);
  const Eigen::VectorXd anchored = az.zeros();
  for (int k = 0; k < n; ++k) {
    ++v.checks;
    if (!(std::abs(direct.zeros(k) - anchored(k)) <= 1e-10 * (1.0 + std::abs(anchored(k)))))
      v.violations.push_back("eigen and anchored zero disagree at k=" + std::to_string(k + 1));
  }
  ++v.checks;
  if (!direct.simple)
    v.violations.push_back("repeated zero");

  // at most one zero outside the support, and only beyond the minimum mass
  const auto& spec = ctx.spec();
  int outside = 0;
  for (int k = 0; k < n; ++k)
    if (anchored(k) < spec.lower() || anchored(k) > spec.upper())
      ++outside;
  ++v.checks;
  if (outside > 1)
    v.violations.push_back(std::to_string(outside) + " zeros outside the support");
  const double N0 = minimum_mass(ctx, n);
  ++v.checks;
  if (outside == 1 && !(ctx.mass() > N0 * (1.0 - 1e-9)))
    v.violations.push_back("zero outside the support below the minimum mass");
  if (outside == 0 && ctx.mass() > N0 * (1.0 + 1e-9))
    v.violations.push_back("no zero outside the support above the minimum mass");
  return v;
}

LimitRates limit_rates(const GeronimusContext& ctx, int n)
{
  require_n(ctx, n);
  const double c = ctx.c();
  const double B = ctx.B(n);
  LimitRates out;
  const Eigen::VectorXd x1 = zeros_kernel(ctx, n - 1).zeros;
  out.limits.resize(n);
  out.rates.resize(n);
  auto rate_interior = [&](double x) {
    const auto p1 = christoffel_kernel_poly_by_recurrence(ctx, n - 1, x);
    return -eval_Qc(ctx, n, x).value / (B * (x - c) * p1.derivative);
  };
  const double rate_c = -eval_Qc(ctx, n, c).value / (B * christoffel_kernel_poly_by_recurrence(ctx, n - 1, c).value);
  const int first = ctx.orientation() > 0 ? 1 : 0;
  for (int k = 0; k < n - 1; ++k) {
    out.limits(first + k) = x1(k);
    out.rates(first + k) = rate_interior(x1(k));
  }
  const int ic = ctx.orientation() > 0 ? 0 : n - 1;
  out.limits(ic) = c;
  out.rates(ic) = rate_c;
  return out;
}

double minimum_mass(const GeronimusContext& ctx, int n, Endpoint endpoint)
{
  require_n(ctx, n);
  const bool left = ctx.orientation() > 0;
  if (left != (endpoint == Endpoint::Lower))
    throw DomainError(left ? "shift left of the support: the minimum mass refers to the lower endpoint"
                           : "shift right of the support: the minimum mass refers to the upper endpoint");
  const double e = left ? ctx.spec().lower() : ctx.spec().upper();
  if (!std::isfinite(e))
    throw DomainError("minimum mass needs a finite endpoint");
  const double q = eval_Qc(ctx, n, e).value;
  const double p1 = christoffel_kernel_poly_by_recurrence(ctx, n - 1, e).value;
  return -q / (ctx.B(n) * (e - ctx.c()) * p1);
}

double minimum_mass(const GeronimusContext& ctx, int n)
{
  return minimum_mass(ctx, n, ctx.orientation() > 0 ? Endpoint::Lower : Endpoint::Upper);
}

bool SweepTrajectory::all_monotone() const
{
  return std::all_of(monotone.begin(), monotone.end(), [](bool b) { return b; });
}

SweepTrajectory sweep(const GeronimusContext& ctx, int n, const std::vector<double>& N_values)
{
  require_n(ctx, n);
  if (N_values.empty())
    throw DomainError("sweep: empty mass list");
  for (std::size_t i = 0; i < N_values.size(); ++i) {
    if (!(N_values[i] >= 0.0) || !std::isfinite(N_values[i]))
      throw DomainError("sweep: masses must be finite and >= 0");
    if (i > 0 && !(N_values[i] > N_values[i - 1]))
      throw DomainError("sweep: masses must be strictly ascending");
  }
  SweepTrajectory t;
  t.n = n;
  t.N_values = N_values;
  t.limits = limit_rates(ctx, n);
  const int m = static_cast<int>(N_values.size());
  t.zeros.resize(m, n);
  t.offsets.resize(m, n);

  AnchoredZeros base = anchored_zeros(ctx.with_mass(0.0), n);
  for (int i = 0; i < m; ++i) {
    const double C = N_values[i] * ctx.B(n);
    const Eigen::VectorXd off = interlaced_offsets([&](double x) { return eval_Qc(ctx, n, x); }, C, base.anchors,
                                                   base.at_zero_mass);
    t.offsets.row(i) = off.transpose();
    t.zeros.row(i) = (base.anchors + off).transpose();
  }
  // offsets shrink in magnitude toward the limits: decreasing zeros for a left shift,
  // increasing for a right shift
  t.monotone.assign(n, true);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < m; ++i) {
      if (!(ctx.orientation() * t.offsets(i, k) > 0.0))
        t.monotone[k] = false;
      if (i > 0 && !(std::abs(t.offsets(i, k)) < std::abs(t.offsets(i - 1, k))))
        t.monotone[k] = false;
    }
  return t;
}

} // namespace geronimus
