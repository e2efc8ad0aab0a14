#pragma once

#include "geronimus/measures.hpp"

#include <Eigen/Core>

#include <vector>

namespace geronimus {

/// Reference zero tables: rows (N, zeros..., z(N)) for a fixed measure, shift and degree.
struct ReferenceTable {
  int id = 0;
  MeasureSpec spec;
  double c = 0.0;
  int n = 0;
  std::vector<double> N_values;
  Eigen::MatrixXd zeros;       ///< row per N
  Eigen::VectorXd charge;      ///< z(N)
  Eigen::VectorXd kernel_limits; ///< zeros of P^{c,[1]}_{n-1}
  double tolerance = 5e-6;
};

/// id = 1 (Laguerre alpha = 0, c = -1, n = 3) or id = 2 (Jacobi alpha = 0.5, beta = 1, c = -1.5, n = 4).
const ReferenceTable& reference_table(int id);

struct FigureSpec {
  int id = 0;
  int table = 0;   ///< reference table sharing the parameters
  double x_min = 0.0, x_max = 0.0;
  int points = 600;
};

const FigureSpec& figure_spec(int id);

} // namespace geronimus
