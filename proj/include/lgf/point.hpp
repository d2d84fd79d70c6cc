#pragma once

#include <cmath>
#include <complex>
#include <string>

namespace lgf {

using Complex = std::complex<double>;

// A point of the Riemann sphere: a finite complex number or the point at
// infinity. Infinity is a tag, never a large number.
class SpherePoint {
 public:
  SpherePoint() = default;
  SpherePoint(Complex z) : z_(z) {}  // NOLINT(google-explicit-constructor)
  SpherePoint(double x) : z_(x, 0.0) {}  // NOLINT(google-explicit-constructor)

  static SpherePoint infinity() {
    SpherePoint p;
    p.infinite_ = true;
    return p;
  }

  // Finite non-NaN values map to themselves; anything else to infinity.
  static SpherePoint from_chart(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag()) ? SpherePoint(z) : infinity();
  }

  bool is_infinity() const noexcept { return infinite_; }
  // Finite coordinate; undefined (returns NaN) at infinity.
  Complex value() const noexcept { return infinite_ ? Complex(NAN, NAN) : z_; }

  // sigma z = -z.
  SpherePoint negated() const { return infinite_ ? infinity() : SpherePoint(-z_); }
  // tau z = 1 / conj(z); swaps 0 and infinity.
  SpherePoint reflected() const {
    if (infinite_) return SpherePoint(Complex{});
    if (z_ == Complex{}) return infinity();
    return SpherePoint(1.0 / std::conj(z_));
  }

  friend bool operator==(const SpherePoint& a, const SpherePoint& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.z_ == b.z_);
  }

  std::string to_string() const;

 private:
  Complex z_{};
  bool infinite_ = false;
};

}  // namespace lgf
