#pragma once

#include <vector>

namespace blowup {

struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Legendre rule with `order` points mapped to [lo, hi].
GaussRule gauss_legendre(int order, double lo = -1.0, double hi = 1.0);

}  // namespace blowup
