#ifndef SZEGO_ERRORS_HPP_
#define SZEGO_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace szego {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
  public:
    using Error::Error;
};

// Evaluation at a pole (riemann_zeta at s = 1).
class PoleError : public DomainError {
  public:
    using DomainError::DomainError;
};

// Request needs more coefficients / rows than are available.
class OutOfRangeError : public Error {
  public:
    using Error::Error;
};

class DimensionMismatchError : public Error {
  public:
    using Error::Error;
};

// Numerical failures: everything the CLI maps to exit code 3.
class NumericError : public Error {
  public:
    using Error::Error;
};

// Quadrature did not reach the requested absolute tolerance.  Carries the
// best error estimate that was achieved.
class QuadratureError : public NumericError {
  public:
    QuadratureError(const std::string& what, double achieved)
        : NumericError(what + " (achieved error estimate " + std::to_string(achieved) + ")"),
          achieved_(achieved) {}

    double achieved() const noexcept { return achieved_; }

  private:
    double achieved_;
};

// The log-integral of the density does not stabilise: Szego condition
// violated at working precision.
class SzegoConditionError : public NumericError {
  public:
    using NumericError::NumericError;
};

class NotPositiveDefiniteError : public NumericError {
  public:
    NotPositiveDefiniteError(const std::string& what, double pivot)
        : NumericError(what), pivot_(pivot) {}

    double pivot() const noexcept { return pivot_; }

  private:
    double pivot_;
};

class DegenerateDenominatorError : public NumericError {
  public:
    using NumericError::NumericError;
};

// Malformed density or configuration input (CLI exit code 2).
class SpecParseError : public Error {
  public:
    using Error::Error;
};

}  // namespace szego

#endif  // SZEGO_ERRORS_HPP_
