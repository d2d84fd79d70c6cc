#include "lgf/sphere.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

#include "lgf/errors.hpp"

namespace lgf {

std::string SpherePoint::to_string() const {
  if (infinite_) return "inf";
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z_.real(), z_.imag());
  return buf;
}

namespace sphere {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

Complex ipow(Complex base, unsigned e) {
  Complex result{1.0, 0.0};
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

// ((z + c)/(z - c))^k with exact pole/zero handling at z = +-c.
Complex mobius_power(Complex z, Complex c, int k, const char* pole_plus, const char* pole_minus) {
  if (k == 0) return {1.0, 0.0};
  if (k > 0) {
    if (z == c) throw PoleError(pole_plus, k);
    return ipow((z + c) / (z - c), unsigned(k));
  }
  if (z == -c) throw PoleError(pole_minus, -k);
  return ipow((z - c) / (z + c), unsigned(-k));
}

}  // namespace

Complex psi(const SpherePoint& z, int m, int n) {
  if (z.is_infinity()) return {1.0, 0.0};
  const Complex v = z.value();
  return mobius_power(v, 1.0, m, "P+ (z = 1)", "P- (z = -1)") * mobius_power(v, kI, n, "Q+ (z = i)", "Q- (z = -i)");
}

Complex psi_dual(const SpherePoint& z, int m, int n) { return psi(z.negated(), m, n); }

Complex omega_coeff(const SpherePoint& z) {
  if (z.is_infinity()) throw PoleError("R+ (z = infinity)", 1);
  if (z.value() == Complex{}) throw PoleError("R- (z = 0)", 1);
  return -0.5 / z.value();
}

Complex dp_m_coeff(const SpherePoint& z) {
  if (z.is_infinity()) return {};  // dz-coefficient decays like z^-2
  const Complex v = z.value();
  if (v == 1.0) throw PoleError("P+ (z = 1)", 1);
  if (v == -1.0) throw PoleError("P- (z = -1)", 1);
  return kI / (v - 1.0) - kI / (v + 1.0);
}

Complex dp_n_coeff(const SpherePoint& z) {
  if (z.is_infinity()) return {};
  const Complex v = z.value();
  if (v == kI) throw PoleError("Q+ (z = i)", 1);
  if (v == -kI) throw PoleError("Q- (z = -i)", 1);
  return kI / (v - kI) - kI / (v + kI);
}

double im_p_m(const SpherePoint& z) {
  if (z.is_infinity()) return 0.0;
  const Complex v = z.value();
  if (v == 1.0) return -kInf;
  if (v == -1.0) return kInf;
  return std::log(std::abs(v - 1.0) / std::abs(v + 1.0));
}

double im_p_n(const SpherePoint& z) {
  if (z.is_infinity()) return 0.0;
  const Complex v = z.value();
  if (v == kI) return -kInf;
  if (v == -kI) return kInf;
  return std::log(std::abs(v - kI) / std::abs(v + kI));
}

SpherePoint to_w(const SpherePoint& z) {
  if (z.is_infinity()) return SpherePoint(1.0);
  const Complex v = z.value();
  if (v == -kI) return SpherePoint::infinity();
  return SpherePoint((v - kI) / (v + kI));
}

SpherePoint from_w(const SpherePoint& w) {
  if (w.is_infinity()) return SpherePoint(-kI);
  const Complex v = w.value();
  if (v == 1.0) return SpherePoint::infinity();
  return SpherePoint(kI * (1.0 + v) / (1.0 - v));
}

double level_radius(const SpherePoint& lambda) {
  const SpherePoint w = to_w(lambda);
  return w.is_infinity() ? kInf : std::abs(w.value());
}

namespace {

// z(w) and dz/dw for z = i(1 + w)/(1 - w). Non-finite at w = 1.
CurveSample chart(Complex w, Complex dw) {
  const Complex d = 1.0 - w;
  return {kI * (1.0 + w) / d, 2.0 * kI / (d * d) * dw};
}

// Clockwise circle |w| = radius.
Curve w_circle(double radius, double phase) {
  return [=](double t) {
    const Complex w = std::polar(radius, phase - kTwoPi * t);
    return chart(w, Complex(0.0, -kTwoPi) * w);
  };
}

}  // namespace

Contour c_contour_radius(double radius, int nodes, double phase) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw DegenerateContourError("degenerate contour: level set collapses to Q+ or Q-");
  }
  ClosedCurve component;
  component.curve = w_circle(radius, phase);
  if (std::abs(radius - 1.0) < 1e-12) {
    // The unit w-circle carries P+-, R+-. Integrals over its arcs are taken as
    // limits from the Q+ side, along a concentric inner circle joined radially.
    component.curve = w_circle(1.0, phase);
    component.shifted = w_circle(kInnerShiftRadius, phase);
    component.connector = [phase](double t, double s) {
      const Complex dir = std::polar(1.0, phase - kTwoPi * t);
      const Complex w = (1.0 + s * (kInnerShiftRadius - 1.0)) * dir;
      return chart(w, (kInnerShiftRadius - 1.0) * dir);
    };
  }
  Contour contour;
  contour.components.push_back(std::move(component));
  contour.nodes = nodes;
  return normalize_orientation(contour, [](Complex z) { return dp_n_coeff(SpherePoint(z)); });
}

Contour c_contour(const SpherePoint& lambda, int nodes) {
  const SpherePoint w = to_w(lambda);
  if (w.is_infinity() || w.value() == Complex{}) {
    throw DegenerateContourError("degenerate contour: lambda = " + std::string(w.is_infinity() ? "Q-" : "Q+") +
                                 " collapses C_lambda to a point");
  }
  const double radius = std::abs(w.value());
  return c_contour_radius(std::abs(radius - 1.0) < 1e-12 ? 1.0 : radius, nodes, std::arg(w.value()));
}

double SphereBackend::residue_radius(const SpherePoint& center) const {
  const MarkedPoints mp = marked_points();
  const SpherePoint all[] = {mp.p_plus, mp.p_minus, mp.q_plus, mp.q_minus, mp.r_plus, mp.r_minus};
  // Distances in the chart of the center: z near finite points, u = 1/z near infinity.
  auto chart_of = [&](const SpherePoint& p) -> SpherePoint {
    if (!center.is_infinity()) return p;
    if (p.is_infinity()) return SpherePoint(0.0);
    if (p.value() == Complex{}) return SpherePoint::infinity();
    return SpherePoint(1.0 / p.value());
  };
  const Complex c = center.is_infinity() ? Complex{} : center.value();
  double nearest = kInf;
  for (const SpherePoint& p : all) {
    if (p == center) continue;
    const SpherePoint q = chart_of(p);
    if (q.is_infinity()) continue;
    nearest = std::min(nearest, std::abs(q.value() - c));
  }
  return 0.5 * nearest;
}

}  // namespace sphere
}  // namespace lgf
