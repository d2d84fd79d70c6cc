#include "lgf/theta.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <numbers>
#include <stdexcept>

#include "lgf/errors.hpp"
#include "lgf/quadrature.hpp"

namespace lgf::theta {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

// g (2/rho)^g int_{R - rho}^inf exp(-pi s^2) (s + rho/2)^{g-1} ds
double tail_bound(double radius, double rho, int g) {
  const double a = radius - rho;
  if (a < 0.0) return INFINITY;
  const GaussLegendre& gl = gauss_legendre(64);
  constexpr double span = 8.0;
  double integral = 0.0;
  for (std::size_t j = 0; j < gl.nodes.size(); ++j) {
    const double s = a + span * gl.nodes[j];
    integral += gl.weights[j] * span * std::exp(-kPi * s * s) * std::pow(s + 0.5 * rho, g - 1);
  }
  return g * std::pow(2.0 / rho, g) * integral;
}

// Visits every N with |T (N + c)| <= radius, last coordinate outermost.
template <class Visit>
void enumerate_ellipsoid(const Eigen::MatrixXd& t, const Eigen::VectorXd& c, double radius, Visit&& visit) {
  const int g = int(t.rows());
  IVector n(g);
  auto recurse = [&](auto&& self, int i, double remaining) -> void {
    if (i < 0) {
      visit(n);
      return;
    }
    double shift = 0.0;  // sum_{j > i} T_ij (N_j + c_j)
    for (int j = i + 1; j < g; ++j) shift += t(i, j) * (n[j] + c[j]);
    const double half = std::sqrt(std::max(remaining, 0.0));
    const double tii = t(i, i);
    const int lo = int(std::ceil((-half - shift) / tii - c[i]));
    const int hi = int(std::floor((half - shift) / tii - c[i]));
    for (int k = lo; k <= hi; ++k) {
      n[i] = k;
      const double comp = tii * (k + c[i]) + shift;
      self(self, i - 1, remaining - comp * comp);
    }
  };
  recurse(recurse, g - 1, radius * radius);
}

}  // namespace

RiemannMatrix::RiemannMatrix(CMatrix b) : b_(std::move(b)) {
  if (b_.rows() == 0 || b_.rows() != b_.cols()) throw DataError("Riemann matrix must be square and non-empty");
  const double scale = std::max(1.0, b_.cwiseAbs().maxCoeff());
  if ((b_ - b_.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) throw DataError("Riemann matrix is not symmetric");
  y_ = b_.imag();
  y_ = 0.5 * (y_ + y_.transpose());
  Eigen::LLT<Eigen::MatrixXd> llt(y_);
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(y_, Eigen::EigenvaluesOnly);
  if (llt.info() != Eigen::Success || eig.eigenvalues().minCoeff() <= 0.0) {
    throw ConvergenceError("imaginary part of the Riemann matrix is not positive definite");
  }
  t_ = llt.matrixU();
  rho_ = std::sqrt(eig.eigenvalues().minCoeff());
}

double truncation_radius(const RiemannMatrix& b, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("theta tolerance must be positive");
  const double rho = b.shortest_vector_bound();
  const int g = b.genus();
  double lo = rho, hi = rho + 1.0;
  while (tail_bound(hi, rho, g) > tol) {
    lo = hi;
    hi *= 2.0;
  }
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (lo + hi);
    (tail_bound(mid, rho, g) > tol ? lo : hi) = mid;
  }
  return hi;
}

ScaledTheta theta_scaled(const CVector& z, const RiemannMatrix& b, double tol) {
  const int g = b.genus();
  if (z.size() != g) throw std::invalid_argument("theta argument has wrong dimension");
  const Eigen::VectorXd im = z.imag();
  const Eigen::VectorXd c = b.imag().llt().solve(im);
  ScaledTheta out;
  out.log_scale = kPi * c.dot(im);
  const double radius = truncation_radius(b, tol);
  const CMatrix& bm = b.matrix();
  enumerate_ellipsoid(b.cholesky_upper(), c, radius, [&](const IVector& n) {
    const CVector nc = n.cast<Complex>();
    const Complex quad = nc.dot(bm * nc);  // dot conjugates the left operand; n is real
    const Complex lin = nc.dot(z);
    out.sum += std::exp(kI * kPi * quad + 2.0 * kI * kPi * lin - out.log_scale);
  });
  return out;
}

Complex theta(const CVector& z, const RiemannMatrix& b, double tol) { return theta_scaled(z, b, tol).value(); }

Complex theta_quasi_period_factor(const CVector& z, const RiemannMatrix& b, int k) {
  if (k < 0 || k >= b.genus() || z.size() != b.genus()) throw std::out_of_range("quasi-period index out of range");
  return std::exp(-kI * kPi * b.matrix()(k, k) - 2.0 * kI * kPi * z[k]);
}

CVector JacobianSpectralData::theta_shift() const {
  CVector s = k;
  for (const CVector& a : a_gamma) s -= a;
  return s;
}

Complex JacobianSpectralData::exp_increment(const PathSample& s, int m, int n) const {
  return std::exp(double(m) * s.int_omega_p + double(n) * s.int_omega_q);
}

double JacobianSpectralData::b_period_residual() const {
  double worst = 0.0;
  const Complex two_pi_i = 2.0 * kPi * kI;
  if (b_periods_p) worst = std::max(worst, (*b_periods_p - two_pi_i * delta_p).cwiseAbs().maxCoeff());
  if (b_periods_q) worst = std::max(worst, (*b_periods_q - two_pi_i * delta_q).cwiseAbs().maxCoeff());
  return worst;
}

void JacobianSpectralData::validate() const {
  const int g = genus();
  auto check = [g](const CVector& v, const char* what) {
    if (v.size() != g) throw DataError(std::string(what) + " must have " + std::to_string(g) + " components");
  };
  check(k, "K");
  check(delta_p, "delta_P");
  check(delta_q, "delta_Q");
  if (int(a_gamma.size()) != g) throw DataError("A_gamma must list exactly g Abel images");
  for (const CVector& a : a_gamma) check(a, "A_gamma entry");
  if (b_periods_p) check(*b_periods_p, "b_periods_P");
  if (b_periods_q) check(*b_periods_q, "b_periods_Q");
  for (const PathSample& s : samples) check(s.abel, "sample abel");
}

namespace {

ScaledTheta checked_denominator(const CVector& z, const RiemannMatrix& b, double tol) {
  const ScaledTheta t = theta_scaled(z, b, tol);
  if (std::abs(t.sum) < 1e3 * tol) throw DivisorSingularityError("theta denominator vanishes in the wave-function formula");
  return t;
}

// theta(x) / theta(y) without forming the scales separately.
Complex ratio(const ScaledTheta& x, const ScaledTheta& y) {
  return std::exp(x.log_scale - y.log_scale) * (x.sum / y.sum);
}

}  // namespace

Complex psi_theta(const JacobianSpectralData& data, const CVector& abel_point, Complex exp_val, int m, int n,
                  double tol) {
  const CVector s = data.theta_shift();
  const CVector d = double(m) * data.delta_p + double(n) * data.delta_q;
  const ScaledTheta num1 = theta_scaled(abel_point + d + s, data.b, tol);
  const ScaledTheta den1 = checked_denominator(abel_point + s, data.b, tol);
  const ScaledTheta num2 = theta_scaled(s, data.b, tol);
  const ScaledTheta den2 = checked_denominator(d + s, data.b, tol);
  return exp_val * ratio(num1, den1) * ratio(num2, den2);
}

double monodromy_check(const JacobianSpectralData& data, const CVector& abel_point, Complex exp_val, int m, int n,
                       const IVector& shift, double tol) {
  if (shift.size() != data.genus()) throw std::invalid_argument("monodromy shift has wrong dimension");
  const CVector mc = shift.cast<double>().cast<Complex>();
  const CVector d = double(m) * data.delta_p + double(n) * data.delta_q;
  const Complex t = std::exp(-2.0 * kPi * kI * mc.dot(d));
  const Complex moved = psi_theta(data, abel_point + data.b.matrix() * mc, exp_val / t, m, n, tol);
  const Complex base = psi_theta(data, abel_point, exp_val, m, n, tol);
  return std::abs(moved - base);
}

}  // namespace lgf::theta
