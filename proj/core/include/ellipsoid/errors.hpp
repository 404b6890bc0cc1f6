#ifndef ELLIPSOID_ERRORS_HPP
#define ELLIPSOID_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ellipsoid {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of the operation.
class DomainError : public Error {
public:
  using Error::Error;
};

/// A positive semi-axis was required but the shape is degenerate there.
class DegenerateShapeError : public DomainError {
public:
  using DomainError::DomainError;
};

/// The requested value is a divergent integral (e.g. K at parameter 1).
class DivergenceError : public DomainError {
public:
  using DomainError::DomainError;
};

/// The (theta, phi) chart is singular at the requested point; use the
/// axis-endpoint evaluation instead.
class PoleChartError : public DomainError {
public:
  using DomainError::DomainError;
};

/// The operation needs a strictly triaxial shape (a > b > c > 0).
class NonTriaxialError : public DomainError {
public:
  using DomainError::DomainError;
};

/// An internal iteration failed to converge within its cap.
class ConvergenceError : public Error {
public:
  using Error::Error;
};

} // namespace ellipsoid

#endif
