#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "lgf/errors.hpp"
#include "lgf/theta.hpp"
#include "lgf/theta_data.hpp"

namespace lgf::theta {
namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kPi = std::numbers::pi;

// theta_3(0, e^{-pi}) = pi^{1/4} / Gamma(3/4)
constexpr double kThetaAtI = 1.0864348112133080146;

CMatrix random_riemann(std::mt19937& rng, int g) {
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  Eigen::MatrixXd x(g, g), a(g, g);
  for (int r = 0; r < g; ++r)
    for (int c = 0; c < g; ++c) x(r, c) = u(rng), a(r, c) = u(rng);
  const Eigen::MatrixXd re = 0.5 * (x + x.transpose());
  const Eigen::MatrixXd im = a.transpose() * a + 0.8 * Eigen::MatrixXd::Identity(g, g);
  return re.cast<Complex>() + kI * im.cast<Complex>();
}

CVector random_vector(std::mt19937& rng, int g, double scale = 0.5) {
  std::uniform_real_distribution<double> u(-scale, scale);
  CVector v(g);
  for (int k = 0; k < g; ++k) v[k] = Complex(u(rng), u(rng));
  return v;
}

JacobianSpectralData random_data(std::mt19937& rng, int g) {
  JacobianSpectralData d{RiemannMatrix(random_riemann(rng, g)), {}, random_vector(rng, g), random_vector(rng, g),
                         random_vector(rng, g), {}, {}, {}};
  for (int k = 0; k < g; ++k) d.a_gamma.push_back(random_vector(rng, g, 0.3));
  return d;
}

double rel(Complex a, Complex b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace

TEST_SUITE("theta") {

TEST_CASE("genus one value at tau = i matches the series oracle") {
  CMatrix b(1, 1);
  b(0, 0) = kI;
  const Complex t = theta(CVector::Zero(1), RiemannMatrix(b));
  CHECK(std::abs(t - kThetaAtI) < 1e-12);
  // the direct series, summed independently
  double direct = 0.0;
  for (int n = -50; n <= 50; ++n) direct += std::exp(-kPi * n * n);
  CHECK(std::abs(t - direct) < 1e-12);
}

TEST_CASE("quasi-periodicity, evenness and refinement") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 20; ++trial) {
    const int g = 1 + trial % 3;
    const RiemannMatrix b(random_riemann(rng, g));
    const CVector z = random_vector(rng, g, 0.7);
    const Complex base = theta(z, b);
    CHECK(rel(theta(-z, b), base) < 1e-12);
    CHECK(rel(theta(z, b, 1e-15), base) < 1e-11);
    for (int k = 0; k < g; ++k) {
      CVector zp = z, zb = z;
      zp[k] += 1.0;
      zb += b.matrix().col(k);
      CHECK(rel(theta(zp, b), base) < 1e-10);
      CHECK(rel(theta(zb, b), theta_quasi_period_factor(z, b, k) * base) < 1e-10);
    }
  }
}

TEST_CASE("decoupled period matrix factorizes") {
  CMatrix b = CMatrix::Zero(2, 2);
  b(0, 0) = Complex(0.2, 1.1);
  b(1, 1) = Complex(-0.3, 0.7);
  CVector z(2);
  z << Complex(0.1, 0.2), Complex(-0.4, 0.05);
  CMatrix b1(1, 1), b2(1, 1);
  b1(0, 0) = b(0, 0);
  b2(0, 0) = b(1, 1);
  const Complex product = theta(z.head(1), RiemannMatrix(b1)) * theta(z.tail(1), RiemannMatrix(b2));
  CHECK(rel(theta(z, RiemannMatrix(b)), product) < 1e-12);
}

TEST_CASE("large imaginary argument stays accurate through scaling") {
  CMatrix b(1, 1);
  b(0, 0) = Complex(0.0, 1.0);
  CVector z(1), zb(1);
  z << Complex(0.1, 3.0);
  zb << z[0] + b(0, 0);
  const RiemannMatrix rb(b);
  CHECK(rel(theta(zb, rb), theta_quasi_period_factor(z, rb, 0) * theta(z, rb)) < 1e-10);
}

TEST_CASE("truncation radius grows as the tolerance shrinks") {
  std::mt19937 rng(1);
  const RiemannMatrix b(random_riemann(rng, 2));
  CHECK(truncation_radius(b, 1e-8) < truncation_radius(b, 1e-14));
  CHECK_THROWS_AS(truncation_radius(b, 0.0), std::invalid_argument);
}

TEST_CASE("invalid Riemann matrices") {
  CMatrix nonsym(2, 2);
  nonsym << Complex(0, 1), Complex(0.3, 0), Complex(0.1, 0), Complex(0, 1);
  CHECK_THROWS_AS(RiemannMatrix{nonsym}, DataError);
  CMatrix indefinite(2, 2);
  indefinite << Complex(0, 1), Complex(0, 2), Complex(0, 2), Complex(0, 1);
  CHECK_THROWS_AS(RiemannMatrix{indefinite}, ConvergenceError);
  CHECK_THROWS_AS(RiemannMatrix{CMatrix(2, 3)}, DataError);
  CMatrix b(1, 1);
  b(0, 0) = kI;
  CHECK_THROWS_AS(theta_quasi_period_factor(CVector::Zero(1), RiemannMatrix(b), 1), std::out_of_range);
  CHECK_THROWS_AS(theta(CVector::Zero(2), RiemannMatrix(b)), std::invalid_argument);
}

TEST_CASE("monodromy of the theta-quotient wave function") {
  std::mt19937 rng(99);
  SUBCASE("genus 1") {
    for (int trial = 0; trial < 5; ++trial) {
      const JacobianSpectralData d = random_data(rng, 1);
      IVector shift(1);
      shift << 1;
      const CVector a = random_vector(rng, 1, 0.4);
      const Complex e(0.8, 0.3);
      const double scale = std::max(1.0, std::abs(psi_theta(d, a, e, 1, 1)));
      CHECK(monodromy_check(d, a, e, 1, 1, shift) / scale < 1e-9);
    }
  }
  SUBCASE("genus 2") {
    for (int trial = 0; trial < 5; ++trial) {
      const JacobianSpectralData d = random_data(rng, 2);
      IVector shift(2);
      shift << 1, -1;
      const CVector a = random_vector(rng, 2, 0.4);
      const Complex e(-0.2, 1.1);
      const double scale = std::max(1.0, std::abs(psi_theta(d, a, e, 2, -1)));
      CHECK(monodromy_check(d, a, e, 2, -1, shift) / scale < 1e-9);
    }
  }
}

TEST_CASE("wave function reduces to the exponential factor at m = n = 0") {
  std::mt19937 rng(4);
  const JacobianSpectralData d = random_data(rng, 2);
  const Complex e(0.3, -0.7);
  CHECK(std::abs(psi_theta(d, random_vector(rng, 2), e, 0, 0) - e) < 1e-14);
}

TEST_CASE("vanishing theta denominator is reported") {
  // theta(1/2 + B/2 | B) = 0 in genus one.
  CMatrix b(1, 1);
  b(0, 0) = Complex(0.1, 1.2);
  CVector zero(1), k(1), dp(1), dq(1);
  zero << 0.0;
  k << 0.0;
  dp << 0.5 + 0.5 * b(0, 0);
  dq << 0.0;
  JacobianSpectralData d{RiemannMatrix(b), {zero}, k, dp, dq, {}, {}, {}};
  CHECK_THROWS_AS(psi_theta(d, zero, 1.0, 1, 0), DivisorSingularityError);
}

TEST_CASE("spectral data validation") {
  std::mt19937 rng(8);
  JacobianSpectralData d = random_data(rng, 2);
  CHECK_NOTHROW(d.validate());
  d.a_gamma.pop_back();
  CHECK_THROWS_AS(d.validate(), DataError);
}

TEST_CASE("JSON round trip and rejection") {
  std::mt19937 rng(12);
  JacobianSpectralData d = random_data(rng, 2);
  d.b_periods_p = 2.0 * kPi * kI * d.delta_p;
  d.samples.push_back({random_vector(rng, 2), Complex(0.1, 0.2), Complex(-0.3, 0.4)});
  const nlohmann::json j = data_to_json(d);
  const JacobianSpectralData back = data_from_json(j);
  CHECK((back.b.matrix() - d.b.matrix()).norm() == 0.0);
  CHECK((back.delta_p - d.delta_p).norm() == 0.0);
  CHECK(back.samples.size() == 1);
  CHECK(back.b_periods_p.has_value());
  CHECK_FALSE(back.b_periods_q.has_value());

  nlohmann::json nonsym = j;
  nonsym["B"][1] = {0.9, 0.0};
  CHECK_THROWS_AS(data_from_json(nonsym), DataError);

  nlohmann::json bad_period = j;
  bad_period["b_periods_P"][0] = {0.0, 0.0};
  CHECK_THROWS_AS(data_from_json(bad_period), DataError);

  nlohmann::json missing = j;
  missing.erase("K");
  CHECK_THROWS_AS(data_from_json(missing), DataError);

  nlohmann::json wrong_genus = j;
  wrong_genus["genus"] = 3;
  CHECK_THROWS_AS(data_from_json(wrong_genus), DataError);

  CHECK_THROWS_AS(load_data("/nonexistent/theta.json"), DataError);
}

}  // TEST_SUITE

}  // namespace lgf::theta
