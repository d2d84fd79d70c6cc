#include <doctest.h>

#include <random>

#include "lgf/errors.hpp"
#include "lgf/lattice.hpp"
#include "lgf/sphere.hpp"

using namespace lgf;

TEST_SUITE("lattice") {

TEST_CASE("sublattice coordinates round trip") {
  for (int m = -7; m <= 7; ++m) {
    for (int n = -7; n <= 7; ++n) {
      if ((m + n) % 2 != 0) {
        CHECK_THROWS_AS(to_sublattice(m, n), ParityError);
        continue;
      }
      const auto [mu, nu] = to_sublattice(m, n);
      CHECK(to_diagonal(mu, nu) == std::pair{m, n});
      const LatticeIndex idx = LatticeIndex::from_diagonal(m, n);
      CHECK(idx.m() == m);
      CHECK(idx.n() == n);
    }
  }
  CHECK(to_sublattice(2, -2) == std::pair{0, -2});
  CHECK_THROWS_AS(LatticeIndex::from_diagonal(1, 0), ParityError);
}

TEST_CASE("coefficients for f = 1 give the discrete Laplacian") {
  const FiveptCoefficients k = coefficients_from_f([](int, int) { return 1.0; }, 3, -2);
  CHECK(k.a_right == 1.0);
  CHECK(k.a_left == 1.0);
  CHECK(k.b_up == 1.0);
  CHECK(k.b_down == 1.0);
  CHECK(k.c == 4.0);
}

TEST_CASE("coefficients pick f at the shifted arguments") {
  const LatticeFunction f = [](int m, int n) { return 10.0 + m + 0.5 * n; };
  // (mu, nu) = (2, 1): m = 1, n = 3
  const FiveptCoefficients k = coefficients_from_f(f, 2, 1);
  CHECK(k.a_right == doctest::Approx(1.0 / f(1, 3)));
  CHECK(k.a_left == doctest::Approx(1.0 / f(0, 2)));
  CHECK(k.b_up == doctest::Approx(f(0, 3)));
  CHECK(k.b_down == doctest::Approx(f(1, 2)));
  CHECK(k.c == doctest::Approx(k.a_right + k.a_left + k.b_up + k.b_down));
}

TEST_CASE("vanishing f where it is inverted is rejected") {
  const LatticeFunction f = [](int m, int n) { return (m == 0 && n == 0) ? 0.0 : 1.0; };
  CHECK_THROWS_AS(coefficients_from_f(f, 0, 0), SingularCoefficientError);
  CHECK_THROWS_AS(coefficients_from_f(f, 1, 0), SingularCoefficientError);  // a_left uses f(0, 0)
  CHECK_NOTHROW(coefficients_from_f(f, 1, 1));                              // b_up = f(0, 0) is not inverted
}

TEST_CASE("window arithmetic") {
  const Window w = Window::square(2);
  CHECK(w.size() == 25);
  CHECK(w.contains(-2, 2));
  CHECK_FALSE(w.contains(3, 0));
  CHECK(w.interior().size() == 9);
  CHECK(w.grown().size() == 49);
  CHECK(Window::square(0).size() == 1);
  CHECK(w.interior(3).empty());
  CHECK(w.interior(3).size() == 0);
}

TEST_CASE("field access outside its window throws") {
  LatticeField field(Window::square(1));
  field.at(1, -1) = 3.0;
  CHECK(field.at(1, -1) == Complex(3.0));
  CHECK_THROWS_AS(field.at(2, 0), WindowError);
  const FivePointOperator op([](int, int) { return 1.0; });
  CHECK_NOTHROW(apply_five_point(field, op, 0, 0));
  CHECK_THROWS_AS(apply_five_point(field, op, 1, 0), WindowError);
}

TEST_CASE("five-point operator is linear") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const Window w = Window::square(3);
  const auto random_field = [&] { return LatticeField::sample(w, [&](int, int) { return Complex(u(rng), u(rng)); }); };
  const LatticeField phi = random_field(), chi = random_field();
  const Complex alpha(0.3, -1.1), beta(2.0, 0.4);
  const LatticeField combo =
      LatticeField::sample(w, [&](int i, int j) { return alpha * phi.at(i, j) + beta * chi.at(i, j); });
  const FivePointOperator op([](int m, int n) { return 1.5 + 0.1 * m - 0.05 * n; });
  for (int mu = -2; mu <= 2; ++mu) {
    for (int nu = -2; nu <= 2; ++nu) {
      const Complex lhs = op.apply(combo, mu, nu);
      const Complex rhs = alpha * op.apply(phi, mu, nu) + beta * op.apply(chi, mu, nu);
      CHECK(std::abs(lhs - rhs) < 1e-13);
    }
  }
}

TEST_CASE("constants are annihilated by L") {
  const FivePointOperator op([](int m, int n) { return 2.0 + std::sin(m + 0.3 * n); });
  CHECK(std::abs(op.apply_fn([](int, int) { return Complex(5.0, -2.0); }, 1, 4)) < 1e-14);
}

TEST_CASE("sphere wave function solves both lattice equations") {
  const LatticeFunction one = [](int, int) { return 1.0; };
  const SpherePoint z(Complex(0.4, 0.9));
  const LatticeField psi = LatticeField::sample(Window::square(6), [&](int m, int n) { return sphere::psi(z, m, n); });
  double scale = 0.0;
  for (int m = -6; m <= 6; ++m)
    for (int n = -6; n <= 6; ++n) scale = std::max(scale, std::abs(psi.at(m, n)));
  CHECK(check_four_point(psi, one) / scale < 1e-14);
  CHECK(check_five_point_diagonal(psi, one) / scale < 1e-14);
}

TEST_CASE("lattice checks detect a field that is not a solution") {
  const LatticeFunction one = [](int, int) { return 1.0; };
  const LatticeField bad = LatticeField::sample(Window::square(3), [](int m, int n) { return Complex(m * m + n, 0.0); });
  CHECK(check_four_point(bad, one) > 0.5);
  CHECK(check_five_point_diagonal(bad, one) > 0.5);
}

}  // TEST_SUITE
