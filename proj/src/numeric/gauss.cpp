#include "blowup/gauss.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace blowup {

GaussRule gauss_legendre(int order, double lo, double hi) {
  if (order < 1) {
    throw std::invalid_argument("gauss_legendre: order must be positive");
  }
  GaussRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  for (int i = 0; i < (order + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= order; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = order * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) {
        break;
      }
    }
    // Recompute the derivative at the converged node.
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= order; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = order * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = mid - half * x;
    rule.nodes[order - 1 - i] = mid + half * x;
    rule.weights[i] = half * w;
    rule.weights[order - 1 - i] = half * w;
  }
  return rule;
}

}  // namespace blowup
