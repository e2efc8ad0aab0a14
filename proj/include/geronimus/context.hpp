#pragma once

#include "geronimus/measures.hpp"
#include "geronimus/recurrence.hpp"
#include "geronimus/secondkind.hpp"

#include <Eigen/Core>

#include <memory>

namespace geronimus {

/// Immutable coefficient tables shared by every mass value of one (measure, shift) pair.
struct ShiftTables {
  MeasureSpec spec;
  double c = 0.0;
  int orientation = 1; ///< +1 when c lies left of the support, -1 when right
  int max_degree = 0;

  RecurrenceTable classical;        ///< P_k, k <= max_degree + 4
  SecondKindTable second_kind;      ///< F_{-1..max_degree+3}
  Recurrence modified;              ///< Q^c_k, k <= max_degree + 3; gamma(0) = total mass of nu
  Eigen::VectorXd modified_norm_sq; ///< ||Q^c_k||^2, k <= max_degree + 2
  Eigen::VectorXd pi;               ///< pi_k = P_{k+1}(c) / P_k(c), k <= max_degree + 3
  Recurrence christoffel;           ///< P^{c,[1]}_k, k <= max_degree + 2
  Eigen::VectorXd kernel_diagonal;  ///< B_k = K^c_{k-1}(c,c), k = 1..max_degree + 2 (entry 0 unused)
};

/// A classical measure with the Geronimus data
///   d nu = d mu / |x - c|,   d nu_N = d nu + N delta_c.
/// Copies are cheap; all tables are shared and immutable.
class GeronimusContext {
public:
  GeronimusContext(const MeasureSpec& spec, double c, double N, int max_degree = 30);

  GeronimusContext with_mass(double N) const;

  const MeasureSpec& spec() const { return tables_->spec; }
  double c() const { return tables_->c; }
  double mass() const { return N_; }
  int max_degree() const { return tables_->max_degree; }
  int orientation() const { return tables_->orientation; }
  /// Support endpoint nearest to the shift.
  double near_endpoint() const { return orientation() > 0 ? spec().lower() : spec().upper(); }

  const RecurrenceTable& classical() const { return tables_->classical; }
  const SecondKindTable& second_kind() const { return tables_->second_kind; }
  const Recurrence& modified() const { return tables_->modified; }
  const Eigen::VectorXd& modified_norm_sq() const { return tables_->modified_norm_sq; }
  const Recurrence& christoffel() const { return tables_->christoffel; }

  double pi(int k) const { return tables_->pi(k); }
  double r(int k) const { return tables_->second_kind.r(k); }
  /// B^c_n = K^c_{n-1}(c,c), n >= 1.
  double B(int n) const;
  /// Lambda^c_n at the context mass, n >= 1.
  double Lambda(int n) const { return Lambda(n, N_); }
  double Lambda(int n, double N) const;
  /// kappa_n = 1 + N B^c_n.
  double kappa(int n) const { return 1.0 + N_ * B(n); }

private:
  GeronimusContext(std::shared_ptr<const ShiftTables> tables, double N);

  std::shared_ptr<const ShiftTables> tables_;
  double N_ = 0.0;
};

} // namespace geronimus
