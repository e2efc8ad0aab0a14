#pragma once

#include "geronimus/measures.hpp"

#include <Eigen/Core>

namespace geronimus {

struct GaussRule {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;

  template <typename F>
  double integrate(F&& f) const
  {
    double sum = 0.0;
    for (Eigen::Index i = 0; i < nodes.size(); ++i)
      sum += weights(i) * f(nodes(i));
    return sum;
  }
};

/// Golub-Welsch rule with `points` nodes; weights scale with rec.gamma(0).
GaussRule gauss_rule(const Recurrence& rec, int points);

/// Gauss rule of the classical measure itself.
GaussRule gauss_rule(const MeasureSpec& spec, int points);

} // namespace geronimus
