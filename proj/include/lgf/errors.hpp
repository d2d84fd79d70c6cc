#pragma once

#include <stdexcept>
#include <string>

namespace lgf {

// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// (m, n) with odd m + n passed where an even-sublattice point is required.
class ParityError : public Error {
 public:
  ParityError(int m, int n);
};

// f vanishes at an argument needed to build the five-point coefficients.
class SingularCoefficientError : public Error {
 public:
  SingularCoefficientError(int m, int n);
};

class WindowError : public Error {
 public:
  WindowError(int i, int j);
};

// Evaluation at a pole of a meromorphic function or differential.
class PoleError : public Error {
 public:
  PoleError(const std::string& where, int order);
  int order() const noexcept { return order_; }

 private:
  int order_;
};

// Level set collapsed to a point (lambda at Q+ or Q-).
class DegenerateContourError : public Error {
 public:
  using Error::Error;
};

// A non-finite integrand sample was met on a contour.
class PoleOnContourError : public Error {
 public:
  using Error::Error;
};

// Integral of dp_n over the contour is not close to +-2pi.
class NotCContourError : public Error {
 public:
  explicit NotCContourError(double period);
};

// Riemann matrix is unusable: not symmetric or Im B not positive definite.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

// A theta denominator of the wave-function formula vanished.
class DivisorSingularityError : public Error {
 public:
  using Error::Error;
};

// Malformed or inconsistent input data (files, matrices).
class DataError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace lgf
