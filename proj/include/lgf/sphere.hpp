#pragma once

// Genus-zero spectral data on the Riemann sphere:
//   P+- = +-1, Q+- = +-i, R+ = infinity, R- = 0,
//   Psi(z, m, n) = ((z + 1)/(z - 1))^m ((z + i)/(z - i))^n,
//   sigma z = -z, tau z = 1/conj(z), Omega = -dz/(2z), f = 1,
//   dp_m = i dz/(z - 1) - i dz/(z + 1), dp_n = i dz/(z - i) - i dz/(z + i).
//
// Level sets of Im p_n are the circles |w| = const in the Moebius coordinate
// w = (z - i)/(z + i), centred at Q+ (w = 0).

#include "lgf/backend.hpp"
#include "lgf/contour.hpp"
#include "lgf/point.hpp"

namespace lgf::sphere {

inline const SpherePoint kPPlus{Complex(1.0, 0.0)};
inline const SpherePoint kPMinus{Complex(-1.0, 0.0)};
inline const SpherePoint kQPlus{Complex(0.0, 1.0)};
inline const SpherePoint kQMinus{Complex(0.0, -1.0)};
inline const SpherePoint kRPlus = SpherePoint::infinity();
inline const SpherePoint kRMinus{Complex(0.0, 0.0)};

// Radius of the shifted circle used for level sets through the marked points.
inline constexpr double kInnerShiftRadius = 0.5;

// Throws PoleError (with the pole order) at z = 1 (m > 0), z = -1 (m < 0),
// z = i (n > 0), z = -i (n < 0). Psi(infinity) = 1.
Complex psi(const SpherePoint& z, int m, int n);
Complex psi_dual(const SpherePoint& z, int m, int n);

// Coefficient -1/(2z) of Omega. PoleError at 0 and infinity.
Complex omega_coeff(const SpherePoint& z);
Complex dp_m_coeff(const SpherePoint& z);
Complex dp_n_coeff(const SpherePoint& z);

// ln|(z - 1)/(z + 1)| and ln|(z - i)/(z + i)|; -inf at P+ / Q+, +inf at P- / Q-.
double im_p_m(const SpherePoint& z);
double im_p_n(const SpherePoint& z);

// w = (z - i)/(z + i) and its inverse.
SpherePoint to_w(const SpherePoint& z);
SpherePoint from_w(const SpherePoint& w);

// |w(lambda)|; the radius of C_lambda in the w-plane.
double level_radius(const SpherePoint& lambda);

// Circle |w| = radius, clockwise around Q+ in w (so that the dp_n period is
// +2pi), starting at w = radius e^{i phase}. Radius 1 passes through P+-, R+-;
// that circle carries an inner shifted copy at radius kInnerShiftRadius.
Contour c_contour_radius(double radius, int nodes = kDefaultNodes, double phase = 0.0);

// C_lambda, starting at lambda. Throws DegenerateContourError for lambda = Q+-.
Contour c_contour(const SpherePoint& lambda, int nodes = kDefaultNodes);

class SphereBackend final : public SpectralBackend {
 public:
  Complex psi(const SpherePoint& z, int m, int n) const override { return sphere::psi(z, m, n); }
  Complex psi_dual(const SpherePoint& z, int m, int n) const override { return sphere::psi_dual(z, m, n); }
  Complex omega(const SpherePoint& z) const override { return omega_coeff(z); }
  Complex dp_m(const SpherePoint& z) const override { return dp_m_coeff(z); }
  Complex dp_n(const SpherePoint& z) const override { return dp_n_coeff(z); }
  double im_p_m(const SpherePoint& z) const override { return sphere::im_p_m(z); }
  double im_p_n(const SpherePoint& z) const override { return sphere::im_p_n(z); }
  double f(int, int) const override { return 1.0; }
  MarkedPoints marked_points() const override { return {kPPlus, kPMinus, kQPlus, kQMinus, kRPlus, kRMinus}; }
  Contour c_contour(const SpherePoint& lambda, int nodes) const override { return sphere::c_contour(lambda, nodes); }
  double residue_radius(const SpherePoint& center) const override;
};

}  // namespace lgf::sphere
