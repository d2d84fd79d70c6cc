#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "lgf/contour.hpp"
#include "lgf/errors.hpp"
#include "lgf/sphere.hpp"

using namespace lgf;
using namespace lgf::sphere;

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kTwoPi = 2.0 * std::numbers::pi;

Differential coeff(Complex (*fn)(const SpherePoint&)) {
  return [fn](Complex z) { return fn(SpherePoint::from_chart(z)); };
}

}  // namespace

TEST_SUITE("sphere") {

TEST_CASE("wave function values at the marked points") {
  for (int m = -3; m <= 3; ++m) {
    for (int n = -3; n <= 3; ++n) {
      CHECK(psi(kRPlus, m, n) == Complex(1.0));
      CHECK(std::abs(psi(kRMinus, m, n) - std::pow(-1.0, m + n)) < 1e-15);
    }
  }
  CHECK(psi(Complex(0.3, -2.0), 0, 0) == Complex(1.0));
  CHECK(psi_dual(kRPlus, 4, -1) == Complex(1.0));
  CHECK(psi_dual(Complex(0.7, 0.1), 0, 0) == Complex(1.0));
}

TEST_CASE("dual wave function is psi at -z") {
  const Complex z = kI / 2.0;
  const Complex expect = (-z + 1.0) / (-z - 1.0);
  CHECK(std::abs(psi_dual(z, 1, 0) - expect) < 1e-15);
}

TEST_CASE("poles raise an error carrying the order") {
  try {
    psi(kPPlus, 3, 0);
    FAIL("expected a pole error");
  } catch (const PoleError& e) {
    CHECK(e.order() == 3);
  }
  try {
    psi(kQMinus, 1, -2);
    FAIL("expected a pole error");
  } catch (const PoleError& e) {
    CHECK(e.order() == 2);
  }
  CHECK(psi(kPPlus, -2, 0) == Complex(0.0));  // a zero, not a pole
  CHECK_THROWS_AS(psi_dual(kPMinus, 1, 0), PoleError);
}

TEST_CASE("Omega coefficient and residues") {
  CHECK(omega_coeff(Complex(1.0)) == Complex(-0.5));
  CHECK(std::abs(omega_coeff(kI) - kI / 2.0) < 1e-16);
  CHECK_THROWS_AS(omega_coeff(kRMinus), PoleError);
  CHECK_THROWS_AS(omega_coeff(kRPlus), PoleError);
  const Differential omega = coeff(omega_coeff);
  CHECK(std::abs(residue(omega, kRMinus, 0.5) - (-0.5)) < 1e-14);
  CHECK(std::abs(residue(omega, kRPlus, 0.5) - 0.5) < 1e-14);
}

TEST_CASE("quasimomentum imaginary parts") {
  CHECK(im_p_n(kRPlus) == 0.0);
  CHECK(im_p_n(kRMinus) == doctest::Approx(0.0));
  CHECK(im_p_m(kRMinus) == doctest::Approx(0.0));
  CHECK(im_p_n(2.0 * kI) == doctest::Approx(std::log(1.0 / 3.0)));
  CHECK(std::isinf(im_p_m(kPPlus)));
  CHECK(im_p_m(kPPlus) < 0.0);
  CHECK(im_p_m(kPMinus) > 0.0);
  CHECK(im_p_n(kQPlus) < 0.0);
  CHECK(std::isinf(im_p_n(kQMinus)));
  // odd under sigma
  const Complex z(0.8, -1.7);
  CHECK(im_p_m(-z) == doctest::Approx(-im_p_m(z)));
  CHECK(im_p_n(-z) == doctest::Approx(-im_p_n(z)));
}

TEST_CASE("quasimomentum differentials") {
  CHECK(std::abs(dp_m_coeff(kRMinus) - Complex(0.0, -2.0)) < 1e-15);
  CHECK_THROWS_AS(dp_m_coeff(kPPlus), PoleError);
  CHECK_THROWS_AS(dp_n_coeff(kQMinus), PoleError);
  CHECK(std::abs(residue(coeff(dp_n_coeff), kQPlus, 0.5) - kI) < 1e-13);
  CHECK(std::abs(residue(coeff(dp_m_coeff), kPPlus, 0.5) - kI) < 1e-13);
  CHECK(std::abs(residue(coeff(dp_m_coeff), kPMinus, 0.5) + kI) < 1e-13);

  // Periods are real.
  Contour loop;
  loop.components.push_back(circle(Complex(0.6, 0.2), 0.7));
  CHECK(std::abs(integrate(coeff(dp_m_coeff), loop).imag()) < 1e-10);
  CHECK(std::abs(integrate(coeff(dp_n_coeff), loop).imag()) < 1e-10);
}

TEST_CASE("dp_n is odd under sigma") {
  // The pullback of c(z) dz by z -> -z is -c(-z) dz.
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int k = 0; k < 20; ++k) {
    const Complex z(u(rng), u(rng));
    CHECK(std::abs(-dp_n_coeff(-z) - (-dp_n_coeff(z))) < 1e-12 * std::max(1.0, std::abs(dp_n_coeff(z))));
    CHECK(std::abs(-dp_m_coeff(-z) - (-dp_m_coeff(z))) < 1e-12 * std::max(1.0, std::abs(dp_m_coeff(z))));
  }
}

TEST_CASE("reality of Psi under tau") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int k = 0; k < 10; ++k) {
    const SpherePoint z(Complex(u(rng), u(rng)));
    for (int m = -5; m <= 5; ++m) {
      for (int n = -5; n <= 5; ++n) {
        const Complex lhs = psi(z.reflected(), m, n);
        const Complex rhs = std::pow(-1.0, m + n) * std::conj(psi(z, m, n));
        CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
      }
    }
  }
}

TEST_CASE("modulus of Psi is an exponential of the quasimomenta") {
  // With these conventions the modulus carries the opposite sign:
  // |Psi| = exp(-m Im p_m - n Im p_n), |Psi+| = exp(m Im p_m + n Im p_n).
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int k = 0; k < 10; ++k) {
    const Complex z(u(rng), u(rng));
    for (int m = -8; m <= 8; ++m) {
      for (int n = -8; n <= 8; ++n) {
        const double e = m * im_p_m(z) + n * im_p_n(z);
        CHECK(std::abs(std::abs(psi(z, m, n)) / std::exp(-e) - 1.0) < 1e-12);
        CHECK(std::abs(std::abs(psi_dual(z, m, n)) / std::exp(e) - 1.0) < 1e-12);
      }
    }
  }
}

TEST_CASE("Moebius coordinate") {
  CHECK(to_w(kQPlus).value() == Complex(0.0));
  CHECK(to_w(kQMinus).is_infinity());
  CHECK(to_w(kRPlus).value() == Complex(1.0));
  CHECK(from_w(Complex(1.0)).is_infinity());
  const Complex z(1.3, -0.4);
  CHECK(std::abs(from_w(to_w(z)).value() - z) < 1e-14);
  CHECK(level_radius(2.0 * kI) == doctest::Approx(1.0 / 3.0));
  CHECK(level_radius(Complex(3.0)) == doctest::Approx(1.0));
  // |w| is a function of Im p_n alone
  CHECK(std::log(level_radius(Complex(0.2, 1.1))) == doctest::Approx(im_p_n(Complex(0.2, 1.1))));
}

TEST_CASE("level-set contours are oriented C-contours") {
  const Differential dp_n = coeff(dp_n_coeff);
  for (Complex lambda : {Complex(2.0, 2.0), Complex(3.0), Complex(1.0, 0.5), Complex(0.0, 2.0), Complex(-2.0, -2.0),
                         Complex(0.0, -0.3)}) {
    const Contour c = c_contour(lambda);
    CHECK(std::abs(integrate(dp_n, c) - kTwoPi) < 1e-10);
    // every sample lies on the level set
    const ClosedCurve& comp = c.components.front();
    for (double t : {0.0, 0.13, 0.5, 0.77}) {
      const SpherePoint p = SpherePoint::from_chart(comp.curve(t).point);
      if (!p.is_infinity() && std::abs(p.value() - 1.0) > 1e-6 && std::abs(p.value() + 1.0) > 1e-6)
        CHECK(im_p_n(p) == doctest::Approx(im_p_n(lambda)).epsilon(1e-9));
    }
  }
}

TEST_CASE("contour starts at lambda and real lambda gives the real axis") {
  const Complex lambda(2.0, 2.0);
  CHECK(std::abs(c_contour(lambda).components.front().curve(0.0).point - lambda) < 1e-13);
  const Contour real = c_contour(Complex(3.0));
  const ClosedCurve& comp = real.components.front();
  CHECK(comp.deformed());
  for (double t = 0.01; t < 1.0; t += 0.1) CHECK(std::abs(comp.curve(t).point.imag()) < 1e-9 * std::max(1.0, std::abs(comp.curve(t).point)));
  CHECK(std::abs(integrate(coeff(dp_n_coeff), real) - kTwoPi) < 1e-10);
}

TEST_CASE("degenerate level sets") {
  CHECK_THROWS_AS(c_contour(kQPlus), DegenerateContourError);
  CHECK_THROWS_AS(c_contour(kQMinus), DegenerateContourError);
  CHECK_THROWS_AS(c_contour_radius(0.0), DegenerateContourError);
  CHECK_THROWS_AS(c_contour_radius(INFINITY), DegenerateContourError);
}

TEST_CASE("default residue radii") {
  const SphereBackend b;
  CHECK(b.residue_radius(kPPlus) == doctest::Approx(0.5));
  CHECK(b.residue_radius(kQPlus) == doctest::Approx(0.5));
  CHECK(b.residue_radius(kRMinus) == doctest::Approx(0.5));
  CHECK(b.residue_radius(kRPlus) == doctest::Approx(0.5));
}

TEST_CASE("sphere points") {
  CHECK(SpherePoint::from_chart(Complex(INFINITY, 0.0)).is_infinity());
  CHECK(SpherePoint::infinity().reflected() == kRMinus);
  CHECK(kRMinus.reflected().is_infinity());
  CHECK(kPPlus.reflected() == kPPlus);
  CHECK(kQPlus.reflected() == kQPlus);
  CHECK(kPPlus.negated() == kPMinus);
  CHECK(SpherePoint::infinity().to_string() == "inf");
}

}  // TEST_SUITE
