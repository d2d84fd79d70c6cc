#pragma once

// Lattice coordinates, the four-point (hyperbolic) equation and the five-point
// elliptic operator on the even sublattice.
//
// Two coordinate systems are used throughout:
//   diagonal  (m, n)   -- the lattice on which the wave function lives;
//   sublattice (mu, nu) -- the even sublattice m + n = 0 mod 2, with
//                          m = mu - nu, n = mu + nu.

#include <complex>
#include <functional>
#include <utility>
#include <vector>

namespace lgf {

using Complex = std::complex<double>;

// A point of the even sublattice. Stored in (mu, nu); (m, n) are derived.
struct LatticeIndex {
  int mu = 0;
  int nu = 0;

  constexpr int m() const noexcept { return mu - nu; }
  constexpr int n() const noexcept { return mu + nu; }

  // Throws ParityError when m + n is odd.
  static LatticeIndex from_diagonal(int m, int n);

  friend constexpr bool operator==(LatticeIndex, LatticeIndex) = default;
};

// (m, n) -> (mu, nu) = ((m + n) / 2, (n - m) / 2). Throws ParityError on odd m + n.
std::pair<int, int> to_sublattice(int m, int n);
// (mu, nu) -> (m, n) = (mu - nu, mu + nu).
std::pair<int, int> to_diagonal(int mu, int nu) noexcept;

// f(m, n); real valued.
using LatticeFunction = std::function<double(int m, int n)>;

struct FiveptCoefficients {
  double a_right = 0.0;  // a_{mu,nu}     = 1 / f(m, n)
  double a_left = 0.0;   // a_{mu-1,nu}   = 1 / f(m-1, n-1)
  double b_up = 0.0;     // b_{mu,nu}     = f(m-1, n)
  double b_down = 0.0;   // b_{mu,nu-1}   = f(m, n-1)
  double c = 0.0;        // sum of the four above
};

// Coefficients of L at (mu, nu). Throws SingularCoefficientError if f vanishes
// where it is inverted.
FiveptCoefficients coefficients_from_f(const LatticeFunction& f, int mu, int nu);

// Inclusive rectangular index range [lo0, hi0] x [lo1, hi1].
struct Window {
  int lo0 = 0, hi0 = -1;
  int lo1 = 0, hi1 = -1;

  static Window square(int half) { return {-half, half, -half, half}; }
  static Window centered(int c0, int c1, int half) { return {c0 - half, c0 + half, c1 - half, c1 + half}; }

  bool empty() const noexcept { return hi0 < lo0 || hi1 < lo1; }
  bool contains(int i, int j) const noexcept { return i >= lo0 && i <= hi0 && j >= lo1 && j <= hi1; }
  int width() const noexcept { return hi0 - lo0 + 1; }
  int height() const noexcept { return hi1 - lo1 + 1; }
  std::size_t size() const noexcept { return empty() ? 0 : std::size_t(width()) * std::size_t(height()); }
  // Shrinks by k on every side.
  Window interior(int k = 1) const noexcept { return {lo0 + k, hi0 - k, lo1 + k, hi1 - k}; }
  Window grown(int k = 1) const noexcept { return {lo0 - k, hi0 + k, lo1 - k, hi1 + k}; }
};

// Complex samples on every index of a window. The meaning of the two indices
// ((m, n) or (mu, nu)) is up to the caller.
class LatticeField {
 public:
  LatticeField() = default;
  explicit LatticeField(Window window, Complex fill = {});

  template <class Fn>
  static LatticeField sample(Window window, Fn&& fn) {
    LatticeField field(window);
    for (int i = window.lo0; i <= window.hi0; ++i)
      for (int j = window.lo1; j <= window.hi1; ++j) field.values_[field.offset(i, j)] = fn(i, j);
    return field;
  }

  const Window& window() const noexcept { return window_; }
  bool contains(int i, int j) const noexcept { return window_.contains(i, j); }

  // Throws WindowError outside the window.
  Complex at(int i, int j) const;
  Complex& at(int i, int j);

 private:
  std::size_t offset(int i, int j) const noexcept {
    return std::size_t(i - window_.lo0) * std::size_t(window_.height()) + std::size_t(j - window_.lo1);
  }

  Window window_;
  std::vector<Complex> values_;
};

// The five-point operator L built from f. Coefficients are derived from f on
// demand for each site.
class FivePointOperator {
 public:
  explicit FivePointOperator(LatticeFunction f) : f_(std::move(f)) {}

  FiveptCoefficients coefficients(int mu, int nu) const { return coefficients_from_f(f_, mu, nu); }
  const LatticeFunction& f() const noexcept { return f_; }

  // (L phi)_{mu,nu} for a field indexed by (mu, nu).
  Complex apply(const LatticeField& phi, int mu, int nu) const;

  // Same stencil for any callable (mu, nu) -> Complex.
  template <class Fn>
  Complex apply_fn(Fn&& phi, int mu, int nu) const {
    const FiveptCoefficients k = coefficients(mu, nu);
    return k.a_right * phi(mu + 1, nu) + k.a_left * phi(mu - 1, nu) + k.b_up * phi(mu, nu + 1) +
           k.b_down * phi(mu, nu - 1) - k.c * phi(mu, nu);
  }

 private:
  LatticeFunction f_;
};

// (L phi)_{mu,nu}; throws WindowError if the stencil leaves phi's window.
Complex apply_five_point(const LatticeField& phi, const FivePointOperator& op, int mu, int nu);

// max |psi(m+1,n+1) - psi(m,n) - i f(m,n) (psi(m+1,n) - psi(m,n+1))| over all
// (m, n) whose stencil fits inside psi's (m, n) window.
double check_four_point(const LatticeField& psi, const LatticeFunction& f);

// Max residual of the five-point relation written on the diagonal lattice:
//   (psi(m+1,n+1) - psi)/f(m,n) + f(m,n-1)(psi(m+1,n-1) - psi)
//   + f(m-1,n)(psi(m-1,n+1) - psi) + (psi(m-1,n-1) - psi)/f(m-1,n-1)
// over all interior (m, n) of psi's window (both parities).
double check_five_point_diagonal(const LatticeField& psi, const LatticeFunction& f);

}  // namespace lgf
