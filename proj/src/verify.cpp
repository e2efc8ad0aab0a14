#include "geronimus/verify.hpp"

#include "geronimus/connection.hpp"
#include "geronimus/context.hpp"
#include "geronimus/error.hpp"
#include "geronimus/ladder.hpp"
#include "geronimus/ode.hpp"
#include "geronimus/oracles.hpp"
#include "geronimus/reference.hpp"
#include "geronimus/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>

namespace geronimus {

namespace {

std::string label(const GridCell& cell, int n, double N)
{
  char buf[160];
  std::snprintf(buf, sizeof buf, "%s c=%g n=%d N=%g", cell.spec.describe().c_str(), cell.c, n, N);
  return buf;
}

std::string num(double v)
{
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

// runs body for every cell; exceptions become failures
void each_cell(SuiteReport& rep, const std::function<void(const GridCell&, const GeronimusContext&)>& body)
{
  for (const auto& cell : default_grid()) {
    try {
      const GeronimusContext ctx(cell.spec, cell.c, 0.0, kGridMaxDegree);
      body(cell, ctx);
    } catch (const Error& e) {
      rep.failures.push_back(cell.spec.describe() + " c=" + num(cell.c) + ": " + e.what());
    }
  }
}

void expect(SuiteReport& rep, bool ok, const std::string& what)
{
  ++rep.cases;
  if (!ok)
    rep.failures.push_back(what);
}

SuiteReport named(const char* suite)
{
  SuiteReport rep;
  rep.suite = suite;
  return rep;
}

void note(SuiteReport& rep, double value) { rep.worst = std::max(rep.worst, value); }

} // namespace

std::vector<GridCell> default_grid()
{
  std::vector<GridCell> grid;
  for (double a : {-0.5, 0.0, 0.5, 2.0})
    for (double c : {-5.0, -1.0, -0.1})
      grid.push_back({MeasureSpec::laguerre(a), c});
  for (auto ab : {std::pair{0.0, 0.0}, std::pair{0.5, 1.0}, std::pair{2.0, -0.5}})
    for (double c : {-3.0, -1.5, 1.5, 3.0})
      grid.push_back({MeasureSpec::jacobi(ab.first, ab.second), c});
  return grid;
}

std::vector<double> default_masses() { return {0.0, 1e-3, 0.05, 1.0, 100.0}; }

SuiteReport verify_interlacing(const Tolerances&)
{
  SuiteReport rep = named("interlacing");
  each_cell(rep, [&](const GridCell& cell, const GeronimusContext& base) {
    for (int n = kGridMinDegree; n <= kGridMaxDegree; ++n)
      for (double N : default_masses()) {
        const auto v = interlacing_report(base.with_mass(N), n);
        rep.cases += v.checks;
        for (const auto& msg : v.violations)
          rep.failures.push_back(label(cell, n, N) + ": " + msg);
      }
  });
  return rep;
}

SuiteReport verify_limits(const Tolerances& tol)
{
  SuiteReport rep = named("limits");
  std::vector<double> masses = default_masses();
  masses.push_back(kLimitMass);
  each_cell(rep, [&](const GridCell& cell, const GeronimusContext& base) {
    for (int n = kGridMinDegree; n <= kGridMaxDegree; ++n) {
      const auto t = sweep(base, n, masses);
      for (int k = 0; k < n; ++k)
        expect(rep, t.monotone[k], label(cell, n, -1) + ": zero " + std::to_string(k + 1) + " not strictly monotone");
      const int last = static_cast<int>(masses.size()) - 1;
      for (int k = 0; k < n; ++k) {
        const double limit = t.limits.limits(k);
        const double off = t.offsets(last, k);
        expect(rep, std::abs(off) <= tol.limit_distance * (1.0 + std::abs(limit)),
               label(cell, n, kLimitMass) + ": zero " + std::to_string(k + 1) + " far from its limit");
        const double rate = t.limits.rates(k);
        const double rel = std::abs(kLimitMass * off - rate) / std::abs(rate);
        note(rep, rel);
        expect(rep, rel <= tol.rate,
               label(cell, n, kLimitMass) + ": rate " + std::to_string(k + 1) + " off by " + num(rel));
      }
    }
  });
  return rep;
}

SuiteReport verify_minimum_mass(const Tolerances& tol)
{
  SuiteReport rep = named("minimum-mass");
  each_cell(rep, [&](const GridCell& cell, const GeronimusContext& base) {
    for (int n = kGridMinDegree; n <= kGridMaxDegree; ++n) {
      const double closed = minimum_mass(base, n);
      const double bisect = minimum_mass_bisection(base, n);
      const double rel = std::abs(closed - bisect) / std::abs(bisect);
      note(rep, rel);
      expect(rep, closed > 0.0 && rel <= tol.minimum_mass,
             label(cell, n, closed) + ": bisection gives " + num(bisect) + " (rel " + num(rel) + ")");
    }
  });
  for (int id : {1, 2}) {
    const auto& t = reference_table(id);
    const GeronimusContext ctx(t.spec, t.c, 0.0, t.n + 1);
    const double N0 = minimum_mass(ctx, t.n);
    // the smallest zero crosses the endpoint between two consecutive reference rows
    bool straddled = false;
    for (std::size_t i = 1; i < t.N_values.size(); ++i)
      if (t.zeros(i - 1, 0) > t.spec.lower() && t.zeros(i, 0) < t.spec.lower())
        straddled = t.N_values[i - 1] < N0 && N0 < t.N_values[i];
    expect(rep, straddled, "table " + std::to_string(id) + ": minimum mass " + num(N0) + " not between the bracketing rows");
  }
  return rep;
}

SuiteReport verify_oracle(const Tolerances& tol)
{
  SuiteReport rep = named("oracle");
  const std::vector<GridCell> cells = {{MeasureSpec::laguerre(0.0), -1.0},
                                       {MeasureSpec::laguerre(0.5), -5.0},
                                       {MeasureSpec::jacobi(0.5, 1.0), -1.5},
                                       {MeasureSpec::jacobi(2.0, -0.5), 3.0}};
  for (const auto& cell : cells)
    for (double N : {0.0, 0.05, 1.0}) {
      try {
        const GeronimusContext ctx(cell.spec, cell.c, N, 10);
        const double diff = coefficient_difference(gram_schmidt_oracle(ctx, 8), connection_coefficients(ctx, 8));
        note(rep, diff);
        expect(rep, diff <= tol.oracle, label(cell, 8, N) + ": Gram-Schmidt differs by " + num(diff));
      } catch (const Error& e) {
        rep.failures.push_back(label(cell, 8, N) + ": " + e.what());
      }
    }
  return rep;
}

SuiteReport verify_ladder(const Tolerances& tol)
{
  SuiteReport rep = named("ladder");
  each_cell(rep, [&](const GridCell& cell, const GeronimusContext& base) {
    for (int n = kGridMinDegree; n <= kIdentityMaxDegree; ++n)
      for (double N : default_masses()) {
        const auto ctx = base.with_mass(N);
        const Eigen::Vector2d d1 = delta_linear_form(ctx, n), d2 = delta_from_ladder(ctx, n);
        const double dd = ((d1 - d2).cwiseAbs().array() / d1.cwiseAbs().cwiseMax(1e-300).array()).maxCoeff();
        expect(rep, dd <= tol.delta, label(cell, n, N) + ": Delta forms differ by " + num(dd));
        double worst = 0.0;
        for (double x : sample_points(ctx, n)) {
          const auto r = ladder_residuals(ctx, n, x);
          worst = std::max({worst, r.lowering, r.raising, r.derivative_c1});
        }
        note(rep, worst);
        expect(rep, worst <= tol.ladder, label(cell, n, N) + ": ladder residual " + num(worst));
      }
  });
  return rep;
}

SuiteReport verify_ode(const Tolerances& tol)
{
  SuiteReport rep = named("ode");
  each_cell(rep, [&](const GridCell& cell, const GeronimusContext& base) {
    for (int n = kGridMinDegree; n <= kIdentityMaxDegree; ++n)
      for (double N : default_masses()) {
        const auto ctx = base.with_mass(N);
        double worst = 0.0, worst_closed = 0.0;
        for (double x : sample_points(ctx, n)) {
          worst = std::max(worst, ode_residual(ctx, n, x));
          const auto o = ode_coefficients(ctx, n, x);
          if (cell.spec.family == Family::Laguerre) {
            const double a = cell.spec.alpha;
            const double L = ctx.Lambda(n);
            const double scale_R = std::abs(L / o.u) + std::abs((a + 1.0) / x) + 1.0;
            const double scale_S = std::abs((L * x + (n + a) * (n - L)) / (x * o.u)) + std::abs((n - 1.0) / x);
            worst_closed = std::max({worst_closed, std::abs(o.R - *o.R_closed) / scale_R,
                                     std::abs(o.S - *o.S_closed) / scale_S});
          } else {
            const double scale_R = std::max(std::abs(*o.R_closed), std::abs(o.R));
            worst_closed = std::max(worst_closed, std::abs(o.R - *o.R_closed) / scale_R);
          }
        }
        note(rep, worst);
        expect(rep, worst <= tol.ode, label(cell, n, N) + ": holonomic residual " + num(worst));
        expect(rep, worst_closed <= tol.closed_form, label(cell, n, N) + ": closed-form R,S differ by " + num(worst_closed));
      }
  });
  return rep;
}

SuiteReport verify_equilibrium(const Tolerances& tol)
{
  SuiteReport rep = named("equilibrium");
  each_cell(rep, [&](const GridCell& cell, const GeronimusContext& base) {
    for (int n = 1; n <= kIdentityMaxDegree; ++n)
      for (double N : default_masses()) {
        const auto e = equilibrium_residual(base.with_mass(N), n);
        note(rep, e.max_residual());
        expect(rep, e.max_residual() <= tol.equilibrium, label(cell, n, N) + ": equilibrium residual " + num(e.max_residual()));
      }
  });
  return rep;
}

SuiteReport verify_positivity(const Tolerances&)
{
  SuiteReport rep = named("positivity");
  each_cell(rep, [&](const GridCell& cell, const GeronimusContext& ctx) {
    for (int n = 1; n <= kGridMaxDegree + 1; ++n)
      expect(rep, ctx.B(n) > 0.0, label(cell, n, 0) + ": B_n <= 0");
    for (int n = 0; n <= kGridMaxDegree - 1; ++n) {
      const auto k = kernel_connection_coeffs(ctx, n);
      expect(rep, k.e_minus_gamma > 0.0, label(cell, n, 0) + ": e_n - gamma <= 0");
    }
  });
  return rep;
}

ComputedTable compute_table(int id)
{
  const auto& ref = reference_table(id);
  const GeronimusContext base(ref.spec, ref.c, 0.0, ref.n + 1);
  ComputedTable t;
  t.id = id;
  t.n = ref.n;
  t.N_values = ref.N_values;
  const int m = static_cast<int>(ref.N_values.size());
  t.zeros.resize(m, ref.n);
  t.charge.resize(m);
  for (int i = 0; i < m; ++i) {
    const auto ctx = base.with_mass(ref.N_values[i]);
    t.zeros.row(i) = zeros_geronimus(ctx, ref.n).zeros.transpose();
    t.charge(i) = short_range(ctx, ref.n, 0.0).root;
  }
  t.kernel_limits = zeros_kernel(base, ref.n - 1).zeros;
  t.minimum_mass = minimum_mass(base, ref.n);
  return t;
}

double table_deviation(const ComputedTable& computed)
{
  const auto& ref = reference_table(computed.id);
  double worst = (computed.zeros - ref.zeros).cwiseAbs().maxCoeff();
  worst = std::max(worst, (computed.charge - ref.charge).cwiseAbs().maxCoeff());
  worst = std::max(worst, (computed.kernel_limits - ref.kernel_limits).cwiseAbs().maxCoeff());
  return worst;
}

SuiteReport verify_tables(const Tolerances&)
{
  SuiteReport rep = named("tables");
  for (int id : {1, 2}) {
    const double dev = table_deviation(compute_table(id));
    note(rep, dev);
    expect(rep, dev <= reference_table(id).tolerance, "table " + std::to_string(id) + ": deviation " + num(dev));
  }
  return rep;
}

const std::vector<std::string>& suite_names()
{
  static const std::vector<std::string> names = {"all",    "interlacing", "limits",      "minimum-mass", "oracle",
                                                 "ladder", "ode",         "equilibrium", "positivity",   "tables"};
  return names;
}

SuiteReport run_suite(const std::string& name, const Tolerances& tol)
{
  if (name == "interlacing")
    return verify_interlacing(tol);
  if (name == "limits")
    return verify_limits(tol);
  if (name == "minimum-mass")
    return verify_minimum_mass(tol);
  if (name == "oracle")
    return verify_oracle(tol);
  if (name == "ladder")
    return verify_ladder(tol);
  if (name == "ode")
    return verify_ode(tol);
  if (name == "equilibrium")
    return verify_equilibrium(tol);
  if (name == "positivity")
    return verify_positivity(tol);
  if (name == "tables")
    return verify_tables(tol);
  if (name == "all") {
    SuiteReport all = named("all");
    for (const auto& sub : suite_names()) {
      if (sub == "all")
        continue;
      const auto r = run_suite(sub, tol);
      all.cases += r.cases;
      for (const auto& f : r.failures)
        all.failures.push_back(sub + ": " + f);
    }
    return all;
  }
  throw DomainError("unknown suite '" + name + "'");
}

} // namespace geronimus
