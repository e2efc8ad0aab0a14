#pragma once

#include "geronimus/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace geronimus {

template <typename H>
Eigen::VectorXd interlaced_offsets(H&& h, double C, const Eigen::VectorXd& anchors, const Eigen::VectorXd& gaps)
{
  const Eigen::Index n = anchors.size();
  Eigen::VectorXd out(n);
  constexpr double eps = std::numeric_limits<double>::epsilon();
  for (Eigen::Index k = 0; k < n; ++k) {
    const double zeta = anchors(k);
    const double w = gaps(k);
    if (C == 0.0) {
      out(k) = w;
      continue;
    }
    // phi(d) = h(zeta + d) + C d G(d),  G(d) = prod_{j != k} (zeta + d - anchors_j)
    auto phi = [&](double d, double* dphi) {
      double G = 1.0, sum = 0.0;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j == k)
          continue;
        const double t = (zeta - anchors(j)) + d;
        G *= t;
        sum += 1.0 / t;
      }
      const auto hv = h(zeta + d);
      if (dphi)
        *dphi = hv.derivative + C * (G + d * G * sum);
      return hv.value + C * d * G;
    };
    double lo = 0.0, hi = w;
    double flo = phi(lo, nullptr);
    if (flo == 0.0) {
      out(k) = 0.0;
      continue;
    }
    double df0;
    phi(0.0, &df0);
    double d0 = -flo / df0;
    if (!(d0 / w > 0.0 && d0 / w < 1.0))
      d0 = 0.5 * w;
    double d = d0;
    bool done = false;
    for (int it = 0; it < 2000 && !done; ++it) {
      double dphi;
      const double f = phi(d, &dphi);
      if (f == 0.0)
        break;
      if ((f > 0.0) == (flo > 0.0)) {
        lo = d;
        flo = f;
      } else {
        hi = d;
      }
      double next = d - f / dphi;
      const bool inside = (next - lo) * (next - hi) < 0.0;
      if (!inside || !std::isfinite(next)) {
        if (lo != 0.0 && hi != 0.0 && (lo > 0.0) == (hi > 0.0))
          next = std::copysign(std::sqrt(std::abs(lo)) * std::sqrt(std::abs(hi)), lo);
        else
          next = 0.5 * (lo + hi);
      }
      done = std::abs(next - d) <= 4.0 * eps * std::abs(next) || std::abs(hi - lo) <= 4.0 * eps * std::max(std::abs(lo), std::abs(hi));
      d = next;
    }
    if (!std::isfinite(d))
      throw NumericalFailure("interlaced_offsets: root solve failed");
    out(k) = d;
  }
  return out;
}

} // namespace geronimus
