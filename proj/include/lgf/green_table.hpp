#pragma once

// A tabulated Green's function with quadrature metadata, and its CSV / JSON
// forms.
//
// CSV: header `mu,nu,mu_t,nu_t,re,im`, one row per window cell, mu outer,
// nu inner, numbers printed with %.17g.
//
// JSON: {"lambda": [re, im] or "inf", "kind": "G" | "G0", "target": [mu, nu],
//        "window": [mu_lo, mu_hi, nu_lo, nu_hi], "nodes": N,
//        "error_estimate": e, "rows": [[mu, nu, re, im], ...]}

#include <iosfwd>

#include "lgf/green.hpp"

namespace lgf {

struct GreenTable {
  SpherePoint lambda;
  LatticeIndex target;
  GreenKind kind = GreenKind::normalized;
  LatticeField values;
  int nodes = kDefaultNodes;
  double error_estimate = 0.0;  // max |value(nodes) - value(2 nodes)| over the window
};

// Tabulates G (or G0) over the window with `nodes` and `2 nodes` and keeps
// the first, recording the largest change as the error estimate.
GreenTable make_green_table(const SpectralBackend& backend, const SpherePoint& lambda, const Window& window,
                            LatticeIndex target, GreenKind kind, int nodes = kDefaultNodes);

void write_csv(std::ostream& out, const GreenTable& table);
void write_json(std::ostream& out, const GreenTable& table);

}  // namespace lgf
