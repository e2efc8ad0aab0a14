#pragma once

#include "geronimus/measures.hpp"

#include <string>
#include <vector>

namespace geronimus {

struct GridCell {
  MeasureSpec spec;
  double c = 0.0;
};

/// Laguerre alpha in {-0.5, 0, 0.5, 2} x c in {-5, -1, -0.1};
/// Jacobi (alpha, beta) in {(0,0), (0.5,1), (2,-0.5)} x c in {-3, -1.5, 1.5, 3}.
std::vector<GridCell> default_grid();
/// {0, 1e-3, 0.05, 1, 100}
std::vector<double> default_masses();

inline constexpr int kGridMinDegree = 2;
inline constexpr int kGridMaxDegree = 25;
inline constexpr int kIdentityMaxDegree = 15;
inline constexpr double kLimitMass = 1e6;

struct Tolerances {
  double limit_distance = 1e-4;  ///< relative to 1 + |limit|
  double rate = 5e-3;
  double minimum_mass = 1e-10;
  double oracle = 1e-8;
  double ladder = 1e-9;
  double ode = 1e-8;
  double closed_form = 1e-9;
  double equilibrium = 1e-6;
  double delta = 1e-12;
};

struct SuiteReport {
  std::string suite;
  long cases = 0;
  std::vector<std::string> failures;
  double worst = 0.0; ///< largest scaled residual seen, where meaningful
  bool ok() const { return failures.empty(); }
};

SuiteReport verify_interlacing(const Tolerances& tol = {});
SuiteReport verify_limits(const Tolerances& tol = {});
SuiteReport verify_minimum_mass(const Tolerances& tol = {});
SuiteReport verify_oracle(const Tolerances& tol = {});
SuiteReport verify_ladder(const Tolerances& tol = {});
SuiteReport verify_ode(const Tolerances& tol = {});
SuiteReport verify_equilibrium(const Tolerances& tol = {});
SuiteReport verify_positivity(const Tolerances& tol = {});
SuiteReport verify_tables(const Tolerances& tol = {});

/// Names accepted by run_suite: all, interlacing, limits, minimum-mass, oracle, ladder, ode,
/// equilibrium, positivity, tables.
const std::vector<std::string>& suite_names();
/// "all" returns one aggregate report whose failures are the union of the sub-suites.
SuiteReport run_suite(const std::string& name, const Tolerances& tol = {});

} // namespace geronimus

#include <Eigen/Core>

namespace geronimus {

struct ComputedTable {
  int id = 0;
  int n = 0;
  std::vector<double> N_values;
  Eigen::MatrixXd zeros;
  Eigen::VectorXd charge;
  Eigen::VectorXd kernel_limits;
  double minimum_mass = 0.0;
};

/// Recomputes a reference table from its parameters.
ComputedTable compute_table(int id);

/// Largest absolute deviation from the reference values (zeros, charges and kernel limits).
double table_deviation(const ComputedTable& computed);

} // namespace geronimus
