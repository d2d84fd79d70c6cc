#include "lgf/contour.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lgf/errors.hpp"
#include "lgf/quadrature.hpp"

namespace lgf {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kConnectorNodes = 48;
constexpr int kMinArcNodes = 16;

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

Complex checked(Complex value, Complex at) {
  if (!finite(value)) {
    throw PoleOnContourError("non-finite integrand on the contour near z = " + SpherePoint::from_chart(at).to_string());
  }
  return value;
}

double wrap(double t) { return t - std::floor(t); }

int sgn(double x) {
  if (std::isnan(x)) return 0;
  return (x > 0.0) - (x < 0.0);
}

Complex trapezoid(const Differential& omega, const Curve& curve, int nodes) {
  Complex total{};
  for (int k = 0; k < nodes; ++k) {
    const CurveSample s = curve(double(k) / nodes);
    total += checked(omega(s.point), s.point) * s.derivative;
  }
  return total / double(nodes);
}

}  // namespace

ClosedCurve circle(Complex center, double radius, double phase) {
  ClosedCurve c;
  c.curve = [=](double t) {
    const Complex e = std::polar(1.0, kTwoPi * t + phase);
    return CurveSample{center + radius * e, Complex(0.0, kTwoPi) * radius * e};
  };
  return c;
}

ClosedCurve circle_around_infinity(double radius, double phase) {
  ClosedCurve c;
  c.curve = [=](double t) {
    // u = radius e^{i theta} counterclockwise, z = 1/u
    const Complex z = std::polar(1.0 / radius, -(kTwoPi * t + phase));
    return CurveSample{z, Complex(0.0, -kTwoPi) * z};
  };
  return c;
}

Complex integrate(const Differential& omega, const Contour& contour) {
  Complex total{};
  for (const ClosedCurve& c : contour.components)
    total += trapezoid(omega, c.deformed() ? c.shifted : c.curve, contour.nodes);
  return double(contour.orientation) * total;
}

Complex residue(const Differential& omega, const SpherePoint& center, double radius, int nodes) {
  Contour c;
  c.nodes = nodes;
  c.components.push_back(center.is_infinity() ? circle_around_infinity(radius) : circle(center.value(), radius));
  return integrate(omega, c) / Complex(0.0, kTwoPi);
}

ResidueEstimate residue_checked(const Differential& omega, const SpherePoint& center, double radius, int nodes,
                                double tol) {
  ResidueEstimate r;
  r.value = residue(omega, center, radius, nodes);
  const Complex half = residue(omega, center, 0.5 * radius, nodes);
  r.halving_change = std::abs(r.value - half);
  r.suspect = r.halving_change > tol * std::max(1.0, std::abs(r.value));
  return r;
}

Contour normalize_orientation(const Contour& contour, const Differential& dp_n) {
  const Complex period = integrate(dp_n, contour);
  if (std::abs(std::abs(period) - kTwoPi) > 0.1 * kTwoPi) throw NotCContourError(period.real());
  return period.real() < 0.0 ? contour.reversed() : contour;
}

WeightedRule split_by_sign(const Contour& contour, const std::function<double(Complex)>& level, int nodes) {
  WeightedRule rule;
  const double orient = contour.orientation;
  const int samples = std::max(nodes, 256);

  for (const ClosedCurve& c : contour.components) {
    auto sign_at = [&](double t) { return sgn(level(c.curve(wrap(t)).point)); };

    // Coarse scan for sign changes, then bisection.
    std::vector<double> cuts;
    std::vector<int> signs(samples);
    for (int k = 0; k < samples; ++k) signs[k] = sign_at((k + 0.5) / samples);
    int prev_k = -1;
    for (int k = 0; k < samples; ++k)
      if (signs[k] != 0) prev_k = k;  // last nonzero sample, for the cyclic wrap
    if (prev_k >= 0) {
      double prev_t = (prev_k + 0.5) / samples - 1.0;
      int prev_s = signs[prev_k];
      for (int k = 0; k < samples; ++k) {
        if (signs[k] == 0) continue;
        const double t = (k + 0.5) / samples;
        if (signs[k] != prev_s) {
          double lo = prev_t, hi = t;
          for (int it = 0; it < 80 && hi - lo > 1e-16; ++it) {
            const double mid = 0.5 * (lo + hi);
            const int s = sign_at(mid);
            if (s == prev_s) {
              lo = mid;
            } else if (s == signs[k]) {
              hi = mid;
            } else {
              lo = hi = mid;  // landed on a zero
            }
          }
          cuts.push_back(wrap(0.5 * (lo + hi)));
        }
        prev_t = t;
        prev_s = signs[k];
      }
    }
    std::sort(cuts.begin(), cuts.end());
    rule.breakpoints.push_back(cuts);

    const Curve& path = c.deformed() ? c.shifted : c.curve;
    if (cuts.empty()) {
      const int s = prev_k >= 0 ? signs[prev_k] : 0;
      for (int k = 0; k < nodes; ++k) {
        const CurveSample p = path(double(k) / nodes);
        rule.nodes.push_back({p.point, orient * p.derivative / double(nodes), s});
      }
      continue;
    }

    for (std::size_t a = 0; a < cuts.size(); ++a) {
      const double ta = cuts[a];
      const double tb = a + 1 < cuts.size() ? cuts[a + 1] : cuts[0] + 1.0;
      const double len = tb - ta;
      const int s = sign_at(ta + 0.5 * len);
      const int count = std::max(kMinArcNodes, int(std::lround(nodes * len)));
      const GaussLegendre& gl = gauss_legendre(count);
      for (int j = 0; j < count; ++j) {
        const CurveSample p = path(wrap(ta + len * gl.nodes[j]));
        rule.nodes.push_back({p.point, orient * p.derivative * (len * gl.weights[j]), s});
      }
      if (c.deformed()) {
        const GaussLegendre& cg = gauss_legendre(kConnectorNodes);
        for (int j = 0; j < kConnectorNodes; ++j) {
          const CurveSample in = c.connector(wrap(ta), cg.nodes[j]);
          const CurveSample out = c.connector(wrap(tb), cg.nodes[j]);
          rule.nodes.push_back({in.point, orient * in.derivative * cg.weights[j], s});
          rule.nodes.push_back({out.point, -orient * out.derivative * cg.weights[j], s});
        }
      }
    }
  }
  return rule;
}

}  // namespace lgf
