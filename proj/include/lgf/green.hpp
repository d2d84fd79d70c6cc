#pragma once

// Kernel K, unnormalized Green's function G0, correction Z and the normalized
// Green's function G of the five-point operator, plus the numerical checks
// that go with them (delta property, residue lemmas, growth bound).
//
// Sites and targets are points of the even sublattice, (mu, nu) and
// (mu~, nu~); the integrands use the diagonal coordinates m = mu - nu,
// n = mu + nu.
//
//   K  = contour integral of Psi(m, n) Psi+(m~, n~) Omega
//   G0 = sgn(m - m~) K / (4 pi)
//   G  = (1 / 4 pi) integral over C_lambda of
//        (sgn(m - m~) + sgn(Im p_m(lambda) - Im p_m(gamma))) Psi Psi+ Omega
//   Z  = G - G0, the part carrying only the second sign.

#include <vector>

#include "lgf/backend.hpp"
#include "lgf/contour.hpp"
#include "lgf/lattice.hpp"

namespace lgf {

// Psi(z, m, n) Psi+(z, m~, n~) Omega(z) as a dz-coefficient.
class WaveDifferential {
 public:
  WaveDifferential(const SpectralBackend& backend, LatticeIndex site, LatticeIndex target)
      : backend_(&backend), site_(site), target_(target) {}

  Complex operator()(const SpherePoint& z) const;
  Differential differential() const;

 private:
  const SpectralBackend* backend_;
  LatticeIndex site_;
  LatticeIndex target_;
};

// Throws PoleOnContourError if the contour runs through a pole.
Complex kernel_K(const SpectralBackend& backend, const Contour& contour, LatticeIndex site, LatticeIndex target);
Complex g0(const SpectralBackend& backend, const Contour& contour, LatticeIndex site, LatticeIndex target);

enum class GreenKind { normalized, unnormalized, correction };

const char* to_string(GreenKind kind);

// G, G0 and Z on C_lambda with one fixed set of quadrature nodes. The sign
// weight jumps where Im p_m crosses Im p_m(lambda); the contour is split at
// those points and each arc gets its own Gauss-Legendre rule.
class GreenFunction {
 public:
  // Throws DegenerateContourError for lambda in {Q+, Q-}, PoleOnContourError
  // when a jump of the weight falls on a pole of Omega (lambda in {R+, R-}).
  GreenFunction(const SpectralBackend& backend, const SpherePoint& lambda, int nodes = kDefaultNodes);

  Complex operator()(LatticeIndex site, LatticeIndex target) const { return evaluate(site, target, GreenKind::normalized); }
  Complex unnormalized(LatticeIndex site, LatticeIndex target) const { return evaluate(site, target, GreenKind::unnormalized); }
  Complex correction(LatticeIndex site, LatticeIndex target) const { return evaluate(site, target, GreenKind::correction); }
  Complex evaluate(LatticeIndex site, LatticeIndex target, GreenKind kind) const;

  // Values over a (mu, nu) window, rows computed in parallel.
  LatticeField table(const Window& window, LatticeIndex target, GreenKind kind) const;

  const SpectralBackend& backend() const noexcept { return *backend_; }
  const SpherePoint& lambda() const noexcept { return lambda_; }
  const Contour& contour() const noexcept { return contour_; }
  const WeightedRule& rule() const noexcept { return rule_; }
  int nodes() const noexcept { return nodes_; }

 private:
  struct Node {
    SpherePoint point;
    Complex weight;  // quadrature weight times Omega / (4 pi)
    int sign;
  };
  std::vector<Complex> dual_weights(LatticeIndex target) const;
  Complex sum(const std::vector<Complex>& dual, LatticeIndex site, LatticeIndex target, GreenKind kind) const;

  const SpectralBackend* backend_;
  SpherePoint lambda_;
  int nodes_;
  Contour contour_;
  WeightedRule rule_;
  std::vector<Node> quad_;
};

Complex green(const SpectralBackend& backend, const SpherePoint& lambda, LatticeIndex site, LatticeIndex target,
              int nodes = kDefaultNodes);

// max over the window of |L G - delta|, L acting in (mu, nu). G is tabulated
// on the window grown by one.
double verify_delta(const GreenFunction& g, const Window& window, LatticeIndex target, GreenKind kind);
double verify_delta(const SpectralBackend& backend, const SpherePoint& lambda, const Window& window,
                    LatticeIndex target, int nodes = kDefaultNodes, GreenKind kind = GreenKind::normalized);

// max over the window of |L K|, K taken on `contour`.
double kernel_L_residual(const SpectralBackend& backend, const Contour& contour, const Window& window,
                         LatticeIndex target);

// res at Q+ of a_{mu,nu} Psi_{mu+1,nu} Psi+_{mu,nu} Omega; expected i.
Complex residue_lemma_Q(const SpectralBackend& backend, int mu, int nu);

// |res at P+ of (a_{mu,nu} Psi_{mu+1,nu} + b_{mu,nu-1} Psi_{mu,nu-1}) Psi+_{mu~,nu~} Omega|.
// Throws PreconditionError unless mu - nu = mu~ - nu~.
double residue_lemma_P(const SpectralBackend& backend, LatticeIndex site, LatticeIndex target);

struct GrowthFit {
  double r1 = 0.0;     // max ratio over the window
  int violations = 0;  // ratios above the cap
  LatticeIndex argmax;
};

// Ratio |G| / exp((mu - mu~) Im p_mu(lambda) + (nu - nu~) Im p_nu(lambda)) over
// the window, with p_mu = p_n + p_m and p_nu = p_n - p_m.
GrowthFit growth_check(const GreenFunction& g, const Window& window, LatticeIndex target, double cap,
                       GreenKind kind = GreenKind::normalized);

}  // namespace lgf
