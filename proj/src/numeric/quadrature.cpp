#include "blowup/quadrature.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "blowup/gauss.hpp"
#include "blowup/sampling.hpp"

namespace blowup {

namespace {

constexpr double kDivisorGuard = 1e-8;
// Relative to |z| below the unit sphere: F varies on the scale |z| there.
constexpr double kJacobianStep = 1e-5;

double factorial_d(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) {
    f *= k;
  }
  return f;
}

struct SimplexRule {
  std::vector<std::vector<double>> points;  // full barycentric coordinates, size n
  std::vector<double> weights;              // sum = 1/(n-1)!
};

// Collapsed (Duffy) Gauss rule on {w >= 0, sum w = 1} in R^n.
SimplexRule simplex_rule(int n, int order) {
  SimplexRule rule;
  if (n == 1) {
    rule.points.push_back({1.0});
    rule.weights.push_back(1.0);
    return rule;
  }
  const GaussRule g = gauss_legendre(order, 0.0, 1.0);
  const int dims = n - 1;
  std::vector<int> idx(dims, 0);
  while (true) {
    std::vector<double> w(n, 0.0);
    double remaining = 1.0;
    double weight = 1.0;
    for (int d = 0; d < dims; ++d) {
      const double x = g.nodes[idx[d]];
      w[d] = remaining * x;
      weight *= g.weights[idx[d]] * remaining;
      remaining *= 1.0 - x;
    }
    w[n - 1] = remaining;
    rule.points.push_back(std::move(w));
    rule.weights.push_back(weight);
    int d = dims - 1;
    while (d >= 0 && ++idx[d] == order) {
      idx[d] = 0;
      --d;
    }
    if (d < 0) {
      break;
    }
  }
  return rule;
}

double gauss_shell(const PointIntegrand& f, int n, double r_in, double r_out, const std::vector<double>& breaks,
                   int radial_order, int simplex_order, Exec exec) {
  std::vector<double> cuts{r_in};
  for (double b : breaks) {
    if (b > r_in && b < r_out) {
      cuts.push_back(b);
    }
  }
  cuts.push_back(r_out);
  std::sort(cuts.begin(), cuts.end());

  const SimplexRule simplex = simplex_rule(n, simplex_order);
  struct Node {
    double s;
    double weight;
  };
  std::vector<Node> radial;
  for (std::size_t p = 0; p + 1 < cuts.size(); ++p) {
    const GaussRule g = gauss_legendre(radial_order, cuts[p], cuts[p + 1]);
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
      radial.push_back({g.nodes[i], g.weights[i]});
    }
  }
  // One partition per radial node keeps the merge order fixed.
  const auto per_node = map_partitions<double>(
      radial.size(),
      [&](std::size_t i) {
        const double s = radial[i].s;
        std::vector<double> terms(simplex.points.size());
        CVec z(n);
        for (std::size_t q = 0; q < simplex.points.size(); ++q) {
          for (int j = 0; j < n; ++j) {
            z[j] = s * std::sqrt(simplex.points[q][static_cast<std::size_t>(j)]);
          }
          terms[q] = simplex.weights[q] * f(z);
        }
        return radial[i].weight * 2.0 * std::pow(s, 2 * n - 1) * pairwise_sum(terms);
      },
      exec);
  return factorial_d(n) * std::pow(std::numbers::pi, n) * pairwise_sum(per_node);
}

struct PartitionSums {
  double sum = 0.0;
  double sum_sq = 0.0;
  std::size_t accepted = 0;
};

IntegralResult monte_carlo_shell(const PointIntegrand& f, int n, double r_in, double r_out,
                                 const QuadratureOptions& options) {
  const std::size_t total = options.mc_points;
  const std::size_t parts = std::max<std::size_t>(1, std::min(options.partitions, total));
  const auto sums = map_partitions<PartitionSums>(
      parts,
      [&](std::size_t p) {
        const std::size_t count = total / parts + (p < total % parts ? 1 : 0);
        SampleRng rng(options.seed, p);
        std::vector<double> vals(count, 0.0);
        std::vector<double> sq(count, 0.0);
        PartitionSums out;
        CVec z(n);
        for (std::size_t i = 0; i < count; ++i) {
          for (int j = 0; j < n; ++j) {
            const double x = rng.uniform(-r_out, r_out);
            const double y = rng.uniform(-r_out, r_out);
            z[j] = {x, y};
          }
          const double s = z.norm();
          if (s > r_out || s < r_in || s < kDivisorGuard) {
            continue;
          }
          const double v = f(z);
          vals[i] = v;
          sq[i] = v * v;
          ++out.accepted;
        }
        out.sum = pairwise_sum(vals);
        out.sum_sq = pairwise_sum(sq);
        return out;
      },
      options.exec);
  std::vector<double> s1;
  std::vector<double> s2;
  std::size_t accepted = 0;
  for (const auto& s : sums) {
    s1.push_back(s.sum);
    s2.push_back(s.sum_sq);
    accepted += s.accepted;
  }
  if (accepted < 10) {
    throw std::invalid_argument("monte-carlo: fewer than 10 effective samples in the integration region");
  }
  const double nn = static_cast<double>(total);
  const double mean = pairwise_sum(s1) / nn;
  const double var = std::max(0.0, pairwise_sum(s2) / nn - mean * mean);
  const double volume = std::pow(2.0 * r_out, 2 * n) * factorial_d(n);
  IntegralResult out;
  out.scheme = Scheme::monte_carlo;
  out.value = volume * mean;
  out.error_estimate = volume * std::sqrt(var / nn);
  out.samples_or_order = static_cast<std::int64_t>(accepted);
  return out;
}

}  // namespace

std::string to_string(Scheme scheme) { return scheme == Scheme::product_gauss ? "product-gauss" : "monte-carlo"; }

double relative_difference(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

IntegralResult integrate_shell(const PointIntegrand& f, int n, double r_in, double r_out, Scheme scheme,
                               const QuadratureOptions& options, const std::vector<double>& breaks) {
  if (n < 1) {
    throw std::invalid_argument("integrate: n must be positive");
  }
  if (!(r_out > 0.0) || !(r_in >= 0.0) || !(r_in < r_out)) {
    throw std::invalid_argument("integrate: need 0 <= r_in < r_out");
  }
  if (scheme == Scheme::monte_carlo) {
    return monte_carlo_shell(f, n, r_in, r_out, options);
  }
  if (options.radial_order < 2 || options.simplex_order < 2) {
    throw std::invalid_argument("integrate: product-gauss orders must be at least 2");
  }
  IntegralResult out;
  out.scheme = Scheme::product_gauss;
  out.value = gauss_shell(f, n, r_in, r_out, breaks, options.radial_order, options.simplex_order, options.exec);
  const double coarse =
      gauss_shell(f, n, r_in, r_out, breaks, options.radial_order / 2, options.simplex_order / 2, options.exec);
  out.error_estimate = std::abs(out.value - coarse);
  out.samples_or_order = options.radial_order;
  return out;
}

IntegralResult integrate_ball(const LocalHamiltonian& h, double radius, int n, Scheme scheme,
                              const QuadratureOptions& options) {
  if (!(radius > 0.0)) {
    throw std::invalid_argument("integrate_ball: radius must be positive");
  }
  if (static_cast<int>(h.weights.size()) != n) {
    throw std::invalid_argument("integrate_ball: weight count differs from n");
  }
  const LocalHamiltonian frozen{h.weights, h.time_averaged_constant(), {}};
  return integrate_shell([&](const CVec& z) { return frozen(z, 0.0); }, n, 0.0, radius, scheme, options);
}

AnnulusComparison verify_annulus_pushforward(const LocalHamiltonian& h, const LocalModelParams& params, Scheme scheme,
                                             const QuadratureOptions& options) {
  const int n = params.n();
  if (static_cast<int>(h.weights.size()) != n) {
    throw std::invalid_argument("annulus check: weight count differs from n");
  }
  const LocalHamiltonian frozen{h.weights, h.time_averaged_constant(), {}};
  std::atomic<std::size_t> skipped{0};
  auto pulled = [&](const CVec& z) {
    if (z.norm() < kDivisorGuard) {
      skipped.fetch_add(1, std::memory_order_relaxed);
      return 0.0;
    }
    const RMat df = f_rho_jacobian(z, params, kJacobianStep * std::min(1.0, z.norm()));
    return frozen(f_rho(z, params), 0.0) * std::abs(df.determinant());
  };
  const std::vector<double> breaks{params.delta(), params.r() - params.delta()};
  AnnulusComparison out;
  out.pulled_back = integrate_shell(pulled, n, 0.0, params.r(), scheme, options, breaks);
  QuadratureOptions direct_options = options;
  direct_options.seed = options.seed + 1;
  out.direct = integrate_shell([&](const CVec& z) { return frozen(z, 0.0); }, n, params.rho(), params.r(), scheme,
                               direct_options);
  out.relative_deviation = relative_difference(out.pulled_back.value, out.direct.value);
  out.skipped = skipped.load();
  return out;
}

NormalizedLemmaResult verify_normalized_lemma(const LocalHamiltonian& h, const LocalModelParams& params,
                                              double v_proxy, Scheme scheme, const QuadratureOptions& options) {
  const AnnulusComparison chart = verify_annulus_pushforward(h, params, scheme, options);
  const IntegralResult outer = integrate_ball(h, params.r(), params.n(), scheme, options);
  QuadratureOptions inner_options = options;
  inner_options.seed = options.seed + 2;
  const IntegralResult inner = integrate_ball(h, params.rho(), params.n(), scheme, inner_options);
  NormalizedLemmaResult out;
  out.lhs = v_proxy + chart.pulled_back.value;
  out.rhs = v_proxy + outer.value - inner.value;
  const double scale = std::abs(v_proxy) + std::abs(outer.value) + std::abs(inner.value);
  out.relative_deviation = scale == 0.0 ? 0.0 : std::abs(out.lhs - out.rhs) / scale;
  out.error_budget = chart.pulled_back.error_estimate + outer.error_estimate + inner.error_estimate;
  return out;
}

}  // namespace blowup
