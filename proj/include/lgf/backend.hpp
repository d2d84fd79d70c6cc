#pragma once

// The evaluation surface consumed by the Green's function assembly: wave
// function and its dual, the differential Omega, quasimomentum differentials,
// the lattice coefficient f and the level-set contours C_lambda.
//
// Points are sphere coordinates (SpherePoint); differentials are returned as
// coefficients against dz.

#include "lgf/contour.hpp"
#include "lgf/point.hpp"

namespace lgf {

struct MarkedPoints {
  SpherePoint p_plus, p_minus;
  SpherePoint q_plus, q_minus;
  SpherePoint r_plus, r_minus;
};

class SpectralBackend {
 public:
  virtual ~SpectralBackend() = default;

  virtual Complex psi(const SpherePoint& z, int m, int n) const = 0;
  // Psi+(z) = Psi(sigma z)
  virtual Complex psi_dual(const SpherePoint& z, int m, int n) const = 0;

  virtual Complex omega(const SpherePoint& z) const = 0;
  virtual Complex dp_m(const SpherePoint& z) const = 0;
  virtual Complex dp_n(const SpherePoint& z) const = 0;
  virtual double im_p_m(const SpherePoint& z) const = 0;
  virtual double im_p_n(const SpherePoint& z) const = 0;

  virtual double f(int m, int n) const = 0;
  virtual MarkedPoints marked_points() const = 0;

  // Normalized level-set contour C_lambda = {Im p_n = Im p_n(lambda)}.
  virtual Contour c_contour(const SpherePoint& lambda, int nodes) const = 0;

  // Default radius for residues at a marked point: half the distance to the
  // nearest other marked point.
  virtual double residue_radius(const SpherePoint& center) const = 0;
};

}  // namespace lgf
