#include "lgf/green.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <thread>

#include "lgf/errors.hpp"

namespace lgf {

namespace {

constexpr double kFourPi = 4.0 * std::numbers::pi;
constexpr double kOmegaPoleThreshold = 1e12;

int sgn(int x) { return (x > 0) - (x < 0); }

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

LatticeFunction f_of(const SpectralBackend& backend) {
  return [&backend](int m, int n) { return backend.f(m, n); };
}

// Calls row(i) for every i in [lo, hi] on a small thread pool; rethrows the
// first exception.
template <class Row>
void parallel_rows(int lo, int hi, Row&& row) {
  const int count = hi - lo + 1;
  if (count <= 0) return;
  const int workers = std::clamp(int(std::thread::hardware_concurrency()), 1, count);
  std::atomic<int> next{lo};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (int i = next++; i <= hi; i = next++) {
      try {
        row(i);
      } catch (...) {
        const std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (std::thread& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

Complex WaveDifferential::operator()(const SpherePoint& z) const {
  return backend_->psi(z, site_.m(), site_.n()) * backend_->psi_dual(z, target_.m(), target_.n()) *
         backend_->omega(z);
}

Differential WaveDifferential::differential() const {
  return [self = *this](Complex z) { return self(SpherePoint::from_chart(z)); };
}

Complex kernel_K(const SpectralBackend& backend, const Contour& contour, LatticeIndex site, LatticeIndex target) {
  try {
    return integrate(WaveDifferential(backend, site, target).differential(), contour);
  } catch (const PoleError& e) {
    throw PoleOnContourError(std::string("kernel integrand has a pole on the contour: ") + e.what());
  }
}

Complex g0(const SpectralBackend& backend, const Contour& contour, LatticeIndex site, LatticeIndex target) {
  const int s = sgn(site.m() - target.m());
  if (s == 0) return {};
  return double(s) / kFourPi * kernel_K(backend, contour, site, target);
}

const char* to_string(GreenKind kind) {
  switch (kind) {
    case GreenKind::normalized: return "G";
    case GreenKind::unnormalized: return "G0";
    case GreenKind::correction: return "Z";
  }
  return "?";
}

GreenFunction::GreenFunction(const SpectralBackend& backend, const SpherePoint& lambda, int nodes)
    : backend_(&backend), lambda_(lambda), nodes_(nodes), contour_(backend.c_contour(lambda, nodes)) {
  const double level = backend.im_p_m(lambda);
  rule_ = split_by_sign(
      contour_, [&](Complex z) { return level - backend.im_p_m(SpherePoint::from_chart(z)); }, nodes);

  // A jump of the weight exactly at a pole of Omega leaves a divergent
  // endpoint contribution that no deformation removes.
  for (std::size_t c = 0; c < contour_.components.size(); ++c) {
    for (double t : rule_.breakpoints[c]) {
      const SpherePoint at = SpherePoint::from_chart(contour_.components[c].curve(t).point);
      bool pole = false;
      try {
        const Complex w = backend.omega(at);
        pole = !finite(w) || std::abs(w) > kOmegaPoleThreshold;
      } catch (const PoleError&) {
        pole = true;
      }
      if (pole) {
        throw PoleOnContourError("sign change of the weight falls on a pole of Omega at z = " + at.to_string());
      }
    }
  }

  quad_.reserve(rule_.nodes.size());
  for (const WeightedNode& q : rule_.nodes) {
    const SpherePoint p = SpherePoint::from_chart(q.point);
    quad_.push_back({p, q.weight * backend.omega(p) / kFourPi, q.sign});
  }
}

std::vector<Complex> GreenFunction::dual_weights(LatticeIndex target) const {
  std::vector<Complex> dual(quad_.size());
  for (std::size_t j = 0; j < quad_.size(); ++j)
    dual[j] = quad_[j].weight * backend_->psi_dual(quad_[j].point, target.m(), target.n());
  return dual;
}

Complex GreenFunction::sum(const std::vector<Complex>& dual, LatticeIndex site, LatticeIndex target,
                           GreenKind kind) const {
  const int s0 = sgn(site.m() - target.m());
  Complex total{};
  for (std::size_t j = 0; j < quad_.size(); ++j) {
    int w = 0;
    switch (kind) {
      case GreenKind::normalized: w = s0 + quad_[j].sign; break;
      case GreenKind::unnormalized: w = s0; break;
      case GreenKind::correction: w = quad_[j].sign; break;
    }
    if (w == 0) continue;
    total += double(w) * dual[j] * backend_->psi(quad_[j].point, site.m(), site.n());
  }
  if (!finite(total)) {
    throw PoleOnContourError("non-finite Green's function value at (" + std::to_string(site.mu) + ", " +
                             std::to_string(site.nu) + ")");
  }
  return total;
}

Complex GreenFunction::evaluate(LatticeIndex site, LatticeIndex target, GreenKind kind) const {
  return sum(dual_weights(target), site, target, kind);
}

LatticeField GreenFunction::table(const Window& window, LatticeIndex target, GreenKind kind) const {
  LatticeField field(window);
  const std::vector<Complex> dual = dual_weights(target);
  parallel_rows(window.lo0, window.hi0, [&](int mu) {
    for (int nu = window.lo1; nu <= window.hi1; ++nu) field.at(mu, nu) = sum(dual, {mu, nu}, target, kind);
  });
  return field;
}

Complex green(const SpectralBackend& backend, const SpherePoint& lambda, LatticeIndex site, LatticeIndex target,
              int nodes) {
  return GreenFunction(backend, lambda, nodes)(site, target);
}

namespace {

double delta_residual(const LatticeField& values, const FivePointOperator& op, const Window& window,
                      LatticeIndex target) {
  double worst = 0.0;
  for (int mu = window.lo0; mu <= window.hi0; ++mu) {
    for (int nu = window.lo1; nu <= window.hi1; ++nu) {
      const double delta = (mu == target.mu && nu == target.nu) ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(op.apply(values, mu, nu) - delta));
    }
  }
  return worst;
}

}  // namespace

double verify_delta(const GreenFunction& g, const Window& window, LatticeIndex target, GreenKind kind) {
  if (window.empty()) throw PreconditionError("verify_delta needs a nonempty window");
  const LatticeField values = g.table(window.grown(1), target, kind);
  return delta_residual(values, FivePointOperator(f_of(g.backend())), window, target);
}

double verify_delta(const SpectralBackend& backend, const SpherePoint& lambda, const Window& window,
                    LatticeIndex target, int nodes, GreenKind kind) {
  return verify_delta(GreenFunction(backend, lambda, nodes), window, target, kind);
}

double kernel_L_residual(const SpectralBackend& backend, const Contour& contour, const Window& window,
                         LatticeIndex target) {
  if (window.empty()) throw PreconditionError("kernel_L_residual needs a nonempty window");
  const Window outer = window.grown(1);
  LatticeField values(outer);
  parallel_rows(outer.lo0, outer.hi0, [&](int mu) {
    for (int nu = outer.lo1; nu <= outer.hi1; ++nu) values.at(mu, nu) = kernel_K(backend, contour, {mu, nu}, target);
  });
  const FivePointOperator op(f_of(backend));
  double worst = 0.0;
  for (int mu = window.lo0; mu <= window.hi0; ++mu)
    for (int nu = window.lo1; nu <= window.hi1; ++nu) worst = std::max(worst, std::abs(op.apply(values, mu, nu)));
  return worst;
}

Complex residue_lemma_Q(const SpectralBackend& backend, int mu, int nu) {
  const LatticeIndex site{mu, nu};
  const double a = coefficients_from_f(f_of(backend), mu, nu).a_right;
  const WaveDifferential wave(backend, {mu + 1, nu}, site);
  const SpherePoint q = backend.marked_points().q_plus;
  return a * residue(wave.differential(), q, backend.residue_radius(q));
}

double residue_lemma_P(const SpectralBackend& backend, LatticeIndex site, LatticeIndex target) {
  if (site.m() != target.m()) {
    throw PreconditionError("residue lemma at P+ requires mu - nu = mu~ - nu~");
  }
  const FiveptCoefficients k = coefficients_from_f(f_of(backend), site.mu, site.nu);
  const WaveDifferential right(backend, {site.mu + 1, site.nu}, target);
  const WaveDifferential down(backend, {site.mu, site.nu - 1}, target);
  const Differential both = [&](Complex z) {
    const SpherePoint p = SpherePoint::from_chart(z);
    return k.a_right * right(p) + k.b_down * down(p);
  };
  const SpherePoint p = backend.marked_points().p_plus;
  return std::abs(residue(both, p, backend.residue_radius(p)));
}

GrowthFit growth_check(const GreenFunction& g, const Window& window, LatticeIndex target, double cap, GreenKind kind) {
  const SpectralBackend& b = g.backend();
  const double pm = b.im_p_m(g.lambda());
  const double pn = b.im_p_n(g.lambda());
  const double p_mu = pn + pm;
  const double p_nu = pn - pm;
  const LatticeField values = g.table(window, target, kind);
  GrowthFit fit;
  fit.argmax = target;
  for (int mu = window.lo0; mu <= window.hi0; ++mu) {
    for (int nu = window.lo1; nu <= window.hi1; ++nu) {
      const double ratio = std::abs(values.at(mu, nu)) / std::exp((mu - target.mu) * p_mu + (nu - target.nu) * p_nu);
      if (ratio > cap) ++fit.violations;
      if (ratio > fit.r1) {
        fit.r1 = ratio;
        fit.argmax = {mu, nu};
      }
    }
  }
  return fit;
}

}  // namespace lgf
