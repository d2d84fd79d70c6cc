#pragma once

// Oriented closed contours, quadrature of differentials along them and
// residues by small-circle quadrature.
//
// A differential is represented by its coefficient against dz in the sphere
// coordinate z: omega = c(z) dz. Curves are parameterized by t in [0, 1) and
// return both z(t) and dz/dt.

#include <functional>
#include <vector>

#include "lgf/point.hpp"

namespace lgf {

inline constexpr int kDefaultNodes = 512;

struct CurveSample {
  Complex point;
  Complex derivative;  // d point / dt
};

using Curve = std::function<CurveSample(double t)>;
using Differential = std::function<Complex(Complex z)>;

// A closed curve t -> z(t), t in [0, 1).
//
// Level sets that run through singular points of the integrands cannot be
// sampled directly. Such a curve carries a homotopic replacement: `shifted` is
// a parallel closed curve off the singular points, and `connector(t, s)`,
// s in [0, 1], joins curve(t) to shifted(t) without crossing singularities.
// An arc [ta, tb] of `curve` is then integrated as
//   connector(ta) + shifted[ta, tb] - connector(tb).
struct ClosedCurve {
  Curve curve;
  Curve shifted;
  std::function<CurveSample(double t, double s)> connector;

  bool deformed() const noexcept { return static_cast<bool>(shifted); }
};

struct Contour {
  std::vector<ClosedCurve> components;
  int nodes = kDefaultNodes;  // per component
  int orientation = +1;       // multiplies every integral

  Contour reversed() const {
    Contour c = *this;
    c.orientation = -orientation;
    return c;
  }
  Contour with_nodes(int n) const {
    Contour c = *this;
    c.nodes = n;
    return c;
  }
};

// Circle |z - center| = radius, counterclockwise, starting at angle `phase`.
ClosedCurve circle(Complex center, double radius, double phase = 0.0);
// Circle |z| = 1/radius traversed so that it winds counterclockwise around
// infinity in the chart u = 1/z (clockwise in z).
ClosedCurve circle_around_infinity(double radius, double phase = 0.0);

// Trapezoidal rule over every component, summed with the orientation sign.
// Throws PoleOnContourError on a non-finite sample.
Complex integrate(const Differential& omega, const Contour& contour);

// (1 / 2 pi i) times the counterclockwise integral over a circle of the given
// radius (in the chart u = 1/z around infinity).
Complex residue(const Differential& omega, const SpherePoint& center, double radius, int nodes = kDefaultNodes);

struct ResidueEstimate {
  Complex value;
  double halving_change = 0.0;  // |res(r) - res(r/2)|
  bool suspect = false;         // halving changed the value beyond tolerance
};

// residue() together with a radius-halving consistency check; `suspect` flags
// a misplaced center or a second singularity inside the circle.
ResidueEstimate residue_checked(const Differential& omega, const SpherePoint& center, double radius,
                                int nodes = kDefaultNodes, double tol = 1e-9);

// Flips the orientation so that the integral of dp_n is +2pi. Throws
// NotCContourError if |integral| is not within 10% of 2pi (a contour around
// both Q+ and Q- integrates to zero).
Contour normalize_orientation(const Contour& contour, const Differential& dp_n);

// Quadrature nodes carrying a piecewise-constant sign.
struct WeightedNode {
  Complex point;
  Complex weight;  // includes dz/dt, the quadrature weight and the orientation
  int sign = 0;    // sgn of the level function on the arc the node belongs to
};

struct WeightedRule {
  std::vector<WeightedNode> nodes;
  std::vector<std::vector<double>> breakpoints;  // per component, parameter values

  template <class Fn>
  Complex sum(Fn&& integrand_with_sign) const {
    Complex total{};
    for (const WeightedNode& q : nodes) total += q.weight * integrand_with_sign(q.point, q.sign);
    return total;
  }
};

// Splits every component at the sign changes of `level` along the curve
// (located by bisection to machine precision) and integrates each arc with
// Gauss-Legendre, the node budget `nodes` per component being shared in
// proportion to parameter length. The sign of each arc is sgn(level) at its
// midpoint; sgn(0) = 0. Components without sign change use the trapezoidal
// rule. `level` receives the curve's point (possibly non-finite at infinity).
WeightedRule split_by_sign(const Contour& contour, const std::function<double(Complex)>& level, int nodes);

}  // namespace lgf
