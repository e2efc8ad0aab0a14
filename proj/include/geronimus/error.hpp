#pragma once

#include <stdexcept>
#include <string>

namespace geronimus {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A parameter lies outside its admissible range (alpha <= -1, N < 0, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

/// The shift c is inside the support of the measure or too close to it.
class ShiftInsideSupport : public DomainError {
public:
  using DomainError::DomainError;
};

/// An iterative procedure did not converge or produced an inconsistent result.
class NumericalFailure : public Error {
public:
  using Error::Error;
};

/// Evaluation at a removable singularity (root of Delta, eta1, sigma or u).
class SingularPoint : public Error {
public:
  using Error::Error;
};

} // namespace geronimus
