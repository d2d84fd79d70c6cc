#include "lgf/lattice.hpp"

#include <algorithm>
#include <cmath>

#include "lgf/errors.hpp"

namespace lgf {

LatticeIndex LatticeIndex::from_diagonal(int m, int n) {
  const auto [mu, nu] = to_sublattice(m, n);
  return {mu, nu};
}

std::pair<int, int> to_sublattice(int m, int n) {
  if ((m + n) % 2 != 0) throw ParityError(m, n);
  return {(m + n) / 2, (n - m) / 2};
}

std::pair<int, int> to_diagonal(int mu, int nu) noexcept { return {mu - nu, mu + nu}; }

namespace {

double checked_inverse(const LatticeFunction& f, int m, int n) {
  const double v = f(m, n);
  if (v == 0.0) throw SingularCoefficientError(m, n);
  return 1.0 / v;
}

}  // namespace

FiveptCoefficients coefficients_from_f(const LatticeFunction& f, int mu, int nu) {
  const int m = mu - nu;
  const int n = mu + nu;
  FiveptCoefficients k;
  k.a_right = checked_inverse(f, m, n);
  k.a_left = checked_inverse(f, m - 1, n - 1);
  k.b_up = f(m - 1, n);
  k.b_down = f(m, n - 1);
  k.c = k.a_right + k.a_left + k.b_up + k.b_down;
  return k;
}

LatticeField::LatticeField(Window window, Complex fill) : window_(window), values_(window.size(), fill) {}

Complex LatticeField::at(int i, int j) const {
  if (!window_.contains(i, j)) throw WindowError(i, j);
  return values_[offset(i, j)];
}

Complex& LatticeField::at(int i, int j) {
  if (!window_.contains(i, j)) throw WindowError(i, j);
  return values_[offset(i, j)];
}

Complex FivePointOperator::apply(const LatticeField& phi, int mu, int nu) const {
  return apply_fn([&phi](int i, int j) { return phi.at(i, j); }, mu, nu);
}

Complex apply_five_point(const LatticeField& phi, const FivePointOperator& op, int mu, int nu) {
  return op.apply(phi, mu, nu);
}

double check_four_point(const LatticeField& psi, const LatticeFunction& f) {
  const Window& w = psi.window();
  const Complex i{0.0, 1.0};
  double worst = 0.0;
  for (int m = w.lo0; m < w.hi0; ++m) {
    for (int n = w.lo1; n < w.hi1; ++n) {
      const Complex lhs = psi.at(m + 1, n + 1) - psi.at(m, n);
      const Complex rhs = i * f(m, n) * (psi.at(m + 1, n) - psi.at(m, n + 1));
      worst = std::max(worst, std::abs(lhs - rhs));
    }
  }
  return worst;
}

double check_five_point_diagonal(const LatticeField& psi, const LatticeFunction& f) {
  const Window w = psi.window().interior();
  double worst = 0.0;
  for (int m = w.lo0; m <= w.hi0; ++m) {
    for (int n = w.lo1; n <= w.hi1; ++n) {
      const Complex c = psi.at(m, n);
      const Complex r = (psi.at(m + 1, n + 1) - c) / f(m, n) + f(m, n - 1) * (psi.at(m + 1, n - 1) - c) +
                        f(m - 1, n) * (psi.at(m - 1, n + 1) - c) + (psi.at(m - 1, n - 1) - c) / f(m - 1, n - 1);
      worst = std::max(worst, std::abs(r));
    }
  }
  return worst;
}

}  // namespace lgf
