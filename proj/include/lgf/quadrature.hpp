#pragma once

#include <vector>

namespace lgf {

// Gauss-Legendre rule mapped to [0, 1].
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// n-point rule, computed by Newton iteration on P_n. Results are cached.
const GaussLegendre& gauss_legendre(int n);

}  // namespace lgf
