#pragma once

// Riemann theta function
//
//   theta(z | B) = sum_{N in Z^g} exp(pi i <B N, N> + 2 pi i <N, z>)
//
// evaluated by a truncated lattice sum over an ellipsoid, and the theta-quotient
// formula for the wave function on Jacobian-level spectral data.
//
// Truncation. Write Y = Im B = T^T T (Cholesky) and c = Y^{-1} Im z. The term
// for N has modulus exp(pi c^T Y c) exp(-pi |T (N + c)|^2), so the sum is
// restricted to |T (N + c)| <= R, R being the smallest radius for which the
// Gaussian tail bound
//
//   g (2/rho)^g int_{R - rho}^inf exp(-pi s^2) (s + rho/2)^{g-1} ds
//
// (rho a lower bound on the shortest vector of T Z^g) is below `tol`. The
// tolerance is therefore relative to the scale exp(pi c^T Y c).

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "lgf/point.hpp"

namespace lgf::theta {

using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using IVector = Eigen::VectorXi;

inline constexpr double kDefaultTol = 1e-12;

// Symmetric g x g complex matrix with positive-definite imaginary part.
class RiemannMatrix {
 public:
  // Throws DataError if B is not square and symmetric (to 1e-12 relative),
  // ConvergenceError if Im B is not positive definite.
  explicit RiemannMatrix(CMatrix b);

  int genus() const noexcept { return int(b_.rows()); }
  const CMatrix& matrix() const noexcept { return b_; }
  const Eigen::MatrixXd& imag() const noexcept { return y_; }
  // Upper-triangular T with Im B = T^T T.
  const Eigen::MatrixXd& cholesky_upper() const noexcept { return t_; }
  // Lower bound on the shortest nonzero vector of T Z^g.
  double shortest_vector_bound() const noexcept { return rho_; }

 private:
  CMatrix b_;
  Eigen::MatrixXd y_;
  Eigen::MatrixXd t_;
  double rho_ = 0.0;
};

// theta = exp(log_scale) * sum, with |sum| <= O(1).
struct ScaledTheta {
  double log_scale = 0.0;  // pi c^T Y c
  Complex sum;
  Complex value() const { return std::exp(log_scale) * sum; }
};

// Ellipsoid radius R meeting the tail bound for `tol`.
double truncation_radius(const RiemannMatrix& b, double tol);

ScaledTheta theta_scaled(const CVector& z, const RiemannMatrix& b, double tol = kDefaultTol);
Complex theta(const CVector& z, const RiemannMatrix& b, double tol = kDefaultTol);

// exp(-pi i B_kk - 2 pi i z_k); theta(z + B e_k) = factor * theta(z).
// k is zero-based; throws std::out_of_range otherwise.
Complex theta_quasi_period_factor(const CVector& z, const RiemannMatrix& b, int k);

// A sample point of the curve at Jacobian level: its Abel image and the
// integrals of Omega(P+, P-), Omega(Q+, Q-) from R+ along the same path.
struct PathSample {
  CVector abel;
  Complex int_omega_p;
  Complex int_omega_q;
};

struct JacobianSpectralData {
  RiemannMatrix b;
  std::vector<CVector> a_gamma;  // Abel images of gamma_1..gamma_g
  CVector k;                     // vector of Riemann constants
  CVector delta_p;               // A(P-) - A(P+)
  CVector delta_q;               // A(Q-) - A(Q+)
  // b-periods of Omega(P+, P-) and Omega(Q+, Q-), when supplied.
  std::optional<CVector> b_periods_p;
  std::optional<CVector> b_periods_q;
  std::vector<PathSample> samples;

  int genus() const noexcept { return b.genus(); }
  // K - sum_k A(gamma_k): the constant shift in every theta argument.
  CVector theta_shift() const;
  // exp(m int Omega(P+,P-) + n int Omega(Q+,Q-)) along the sample's path.
  Complex exp_increment(const PathSample& s, int m, int n) const;
  // max_k |b-period - 2 pi i Delta_k| over the supplied b-periods (0 if none).
  double b_period_residual() const;
  // Throws DataError on dimension mismatches.
  void validate() const;
};

// exp_val * theta(A + m dP + n dQ + s) / theta(A + s) * theta(s) / theta(m dP + n dQ + s),
// s = K - sum A(gamma_k). Throws DivisorSingularityError if a denominator
// theta vanishes (relative to its scale).
Complex psi_theta(const JacobianSpectralData& data, const CVector& abel_point, Complex exp_val, int m, int n,
                  double tol = kDefaultTol);

// |psi_theta(A + B M, exp_val / t) - psi_theta(A, exp_val)|,
// t = exp(-2 pi i <M, m dP + n dQ>).
double monodromy_check(const JacobianSpectralData& data, const CVector& abel_point, Complex exp_val, int m, int n,
                       const IVector& shift, double tol = kDefaultTol);

}  // namespace lgf::theta
