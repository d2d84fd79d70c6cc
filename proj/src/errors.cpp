#include "lgf/errors.hpp"

#include <cstdio>

namespace lgf {

ParityError::ParityError(int m, int n)
    : Error("odd sublattice point (m, n) = (" + std::to_string(m) + ", " + std::to_string(n) +
            "): m + n must be even") {}

SingularCoefficientError::SingularCoefficientError(int m, int n)
    : Error("f(" + std::to_string(m) + ", " + std::to_string(n) + ") = 0: five-point coefficient is singular") {}

WindowError::WindowError(int i, int j)
    : Error("index (" + std::to_string(i) + ", " + std::to_string(j) + ") outside the field window") {}

PoleError::PoleError(const std::string& where, int order)
    : Error("pole of order " + std::to_string(order) + " at " + where), order_(order) {}

namespace {
std::string period_message(double period) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "not a C-contour: integral of dp_n is %.6g, expected +-2pi", period);
  return buf;
}
}  // namespace

NotCContourError::NotCContourError(double period) : Error(period_message(period)) {}

}  // namespace lgf
