#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "blowup/local_model.hpp"
#include "blowup/parallel.hpp"

namespace blowup {

enum class Scheme { product_gauss, monte_carlo };

std::string to_string(Scheme scheme);

/// Integrals are taken against omega_0^n = n! dLeb, so int_{B_rho} omega_0^n
/// = pi^n rho^{2n}.
struct IntegralResult {
  double value = 0.0;
  double error_estimate = 0.0;  // Gauss: |I(N) - I(N/2)|; Monte-Carlo: one standard error
  Scheme scheme = Scheme::product_gauss;
  std::int64_t samples_or_order = 0;  // Gauss radial order, or Monte-Carlo accepted samples
};

struct QuadratureOptions {
  int radial_order = 32;  // per radial piece
  int simplex_order = 8;  // per collapsed simplex coordinate
  std::size_t mc_points = 200000;
  std::uint64_t seed = 0xC0FFEE;
  std::size_t partitions = 64;
  Exec exec = Exec::parallel;
};

/// Integrand evaluated at a point of C^n.
using PointIntegrand = std::function<double(const CVec&)>;

/// int f omega_0^n over r_in <= |z| <= r_out. Product-Gauss assumes f depends
/// only on (|z_1|^2, ..., |z_n|^2): it integrates radially with Gauss-Legendre
/// (split at `breaks`) and over the simplex of |z_j|^2/|z|^2 with collapsed
/// Gauss, evaluating f at real representatives. Monte-Carlo draws uniform
/// points in the cube [-r_out, r_out]^{2n} and rejects those outside the
/// shell, with no invariance assumption. Throws std::invalid_argument if fewer
/// than 10 samples land in the shell.
IntegralResult integrate_shell(const PointIntegrand& f, int n, double r_in, double r_out, Scheme scheme,
                               const QuadratureOptions& options = {}, const std::vector<double>& breaks = {});

/// int_{B_radius} H omega_0^n with H time-averaged.
IntegralResult integrate_ball(const LocalHamiltonian& h, double radius, int n, Scheme scheme,
                              const QuadratureOptions& options = {});

struct AnnulusComparison {
  IntegralResult pulled_back;  // int_{0<|z|<=r} (H o F) det DF omega_0^n, chart side
  IntegralResult direct;       // int_{rho<=|z|<=r} H omega_0^n
  double relative_deviation = 0.0;
  std::size_t skipped = 0;  // samples within 1e-8 of the divisor
};

/// Both sides of the change of variables through F, by independent
/// parameterizations; det DF from central differences with step
/// 1e-5 * min(1, |z|).
AnnulusComparison verify_annulus_pushforward(const LocalHamiltonian& h, const LocalModelParams& params, Scheme scheme,
                                             const QuadratureOptions& options = {});

struct NormalizedLemmaResult {
  double lhs = 0.0;  // v_proxy + chart integral of H~
  double rhs = 0.0;  // v_proxy + int_{B_r} H - int_{B_rho} H
  double relative_deviation = 0.0;  // |lhs - rhs| / (|v_proxy| + |int_{B_r} H| + |int_{B_rho} H|)
  double error_budget = 0.0;  // sum of the quadrature error estimates involved
};

/// Restriction of int H~ w~^n = int H w^n - int_{B_rho} H w^n to the chart.
/// v_proxy stands for the integral of H over the part of M outside the ball;
/// it enters both sides identically.
NormalizedLemmaResult verify_normalized_lemma(const LocalHamiltonian& h, const LocalModelParams& params,
                                              double v_proxy, Scheme scheme, const QuadratureOptions& options = {});

double relative_difference(double a, double b);

}  // namespace blowup
