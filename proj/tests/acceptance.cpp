// One line per acceptance criterion; exit status is the number of failures.
#include <geronimus/geronimus.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

using namespace geronimus;

namespace {

int failures = 0;

void line(bool pass, const char* name, const std::string& detail)
{
  std::printf("%s  %-28s %s\n", pass ? "PASS" : "FAIL", name, detail.c_str());
  failures += pass ? 0 : 1;
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0)
{
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

double seconds(const std::function<void()>& f)
{
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string suite_detail(const SuiteReport& r, double secs)
{
  std::string s = fmt("cases=%.0f failures=%.0f worst=%.3g", double(r.cases), double(r.failures.size()), r.worst);
  s += fmt(" time=%.2fs", secs);
  if (!r.failures.empty())
    s += " first: " + r.failures.front();
  return s;
}

void table(int id, const char* name)
{
  ComputedTable t;
  const double secs = seconds([&] { t = compute_table(id); });
  // zeros and z columns only; kernel limits are a separate line
  const auto& ref = reference_table(id);
  const double dz = (t.zeros - ref.zeros).cwiseAbs().maxCoeff();
  const double dc = (t.charge - ref.charge).cwiseAbs().maxCoeff();
  const double dev = std::max(dz, dc);
  line(dev <= 5e-6 && secs < 1.0, name, fmt("max|dev|=%.3g (tol 5e-06) time=%.3fs", dev, secs));
}

void kernel_limits()
{
  const double expect1[] = {0.869089, 4.273768};
  const double expect2[] = {-0.546629, 0.161665, 0.765232};
  const GeronimusContext lag(MeasureSpec::laguerre(0.0), -1.0, 0.0, 8);
  const GeronimusContext jac(MeasureSpec::jacobi(0.5, 1.0), -1.5, 0.0, 8);
  const auto z1 = zeros_kernel(lag, 2).zeros;
  const auto z2 = zeros_kernel(jac, 3).zeros;
  double dev = 0.0;
  for (int k = 0; k < 2; ++k)
    dev = std::max(dev, std::abs(z1(k) - expect1[k]));
  for (int k = 0; k < 3; ++k)
    dev = std::max(dev, std::abs(z2(k) - expect2[k]));
  line(dev <= 5e-6, "kernel-limit zeros", fmt("max|dev|=%.3g (tol 5e-06)", dev));
}

void suite(const char* name, const std::function<SuiteReport()>& run, double budget = 0.0)
{
  SuiteReport r;
  const double secs = seconds([&] { r = run(); });
  const bool in_time = budget <= 0.0 || secs < budget;
  line(r.ok() && in_time && r.cases > 0, name, suite_detail(r, secs));
}

SuiteReport merged(std::initializer_list<std::function<SuiteReport()>> runs)
{
  SuiteReport out;
  for (const auto& run : runs) {
    const SuiteReport r = run();
    out.cases += r.cases;
    out.worst = std::max(out.worst, r.worst);
    out.failures.insert(out.failures.end(), r.failures.begin(), r.failures.end());
  }
  return out;
}

} // namespace

int main()
{
  table(1, "table 1 (Laguerre n=3)");
  table(2, "table 2 (Jacobi n=4)");
  kernel_limits();
  suite("interlacing grid", [] { return verify_interlacing(); }, 30.0);
  suite("monotonicity and limits", [] { return verify_limits(); });
  suite("minimum mass", [] { return verify_minimum_mass(); });
  suite("oracle equivalence", [] { return verify_oracle(); });
  suite("ladder/ODE/electrostatics", [] {
    return merged({[] { return verify_ladder(); }, [] { return verify_ode(); }, [] { return verify_equilibrium(); }});
  });
  suite("positivity", [] { return verify_positivity(); });
  std::printf("%d failed\n", failures);
  return failures;
}
