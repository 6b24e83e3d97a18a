#include "blowup/checks.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>

#include "blowup/sampling.hpp"

namespace blowup {

namespace {

constexpr double kDivisorGuard = 1e-8;

double max_abs(const RMat& m) { return m.cwiseAbs().maxCoeff(); }
double max_abs(const CVec& v) { return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff(); }

}  // namespace

CheckResult make_result(std::string name, const MaxReduction& r, double tolerance) {
  CheckResult out;
  out.check = std::move(name);
  out.samples = r.evaluated;
  out.skipped = r.skipped;
  out.max_deviation = r.max;
  out.tolerance = tolerance;
  out.pass = r.max <= tolerance;
  return out;
}

std::vector<CheckResult> beta_profile_check(const LocalModelParams& params, std::size_t grid) {
  CheckResult endpoints;
  endpoints.check = "beta-endpoints";
  endpoints.samples = 2;
  endpoints.max_deviation = std::max(std::abs(beta_profile(0.0, params).value - params.rho()),
                                     std::abs(beta_profile(params.r(), params).value - params.r()));
  endpoints.tolerance = 0.0;
  endpoints.pass = endpoints.max_deviation == 0.0;

  double min_slope = 1.0;
  double max_slope = 0.0;
  double prev = beta_profile(0.0, params).value;
  bool increasing = true;
  for (std::size_t i = 1; i <= grid; ++i) {
    const double s = i == grid ? params.r() : params.r() * static_cast<double>(i) / static_cast<double>(grid);
    const ProfileValue b = beta_profile(s, params);
    min_slope = std::min(min_slope, b.derivative);
    max_slope = std::max(max_slope, b.derivative);
    increasing = increasing && b.value > prev;
    prev = b.value;
  }
  CheckResult slope;
  slope.check = "beta-slope";
  slope.samples = grid;
  // Distance of the observed slopes from (0, 1].
  slope.max_deviation = std::max({0.0, max_slope - 1.0, -min_slope});
  slope.tolerance = 0.0;
  slope.pass = min_slope > 0.0 && max_slope <= 1.0 && increasing;
  slope.reference_magnitude = min_slope;
  return {endpoints, slope};
}

CheckResult s1_invariance_check(const ScalarField& h, int n, double radius, std::size_t samples, std::uint64_t seed,
                                double tolerance, Exec exec) {
  const auto r = reduce_max(
      samples,
      [&](std::size_t i) -> std::optional<double> {
        SampleRng rng(seed, i);
        const CVec z = random_ball_point(rng, n, radius);
        const std::complex<double> lambda = std::polar(1.0, 2.0 * std::numbers::pi * rng.uniform());
        return std::abs(h(z) - h(lambda * z));
      },
      exec);
  return make_result("s1-invariance", r, tolerance);
}

double PullbackResult::max_deviation() const { return std::max(conjugation.max_deviation, form.max_deviation); }

PullbackResult symplectic_pullback_check(const ChartMap& psi, const LocalModelParams& params,
                                         const PullbackOptions& options) {
  const int n = params.n();
  const double r = params.r();
  const RMat j = standard_symplectic_matrix(n);
  auto real_psi = [&](const RVec& x) { return to_real(psi(to_complex(x))); };

  std::vector<double> conj(options.samples, -1.0);
  auto form = reduce_max(
      options.samples,
      [&](std::size_t i) -> std::optional<double> {
        SampleRng rng(options.seed, i);
        const CVec z = random_ball_point(rng, n, r);
        if (z.norm() < kDivisorGuard) {
          return std::nullopt;
        }
        const CVec fz = f_rho(z, params);
        const CVec pz = psi(z);
        const CVec pfz = psi(fz);
        if (pz.norm() <= r && pz.norm() >= kDivisorGuard && pfz.norm() <= r) {
          conj[i] = max_abs(CVec(f_rho(pz, params) - pfz));
        }
        if (options.reference == ReferenceForm::standard) {
          const RMat d = fd_jacobian(real_psi, to_real(fz), options.step);
          return max_abs(RMat(d.transpose() * j * d - j));
        }
        if (conj[i] < 0.0) {
          return std::nullopt;
        }
        const RMat df_z = f_rho_jacobian(z, params, options.step);
        const RMat df_pz = f_rho_jacobian(pz, params, options.step);
        const RMat omega_z = df_z.transpose() * j * df_z;
        const RMat omega_pz = df_pz.transpose() * j * df_pz;
        const RMat d = fd_jacobian(real_psi, to_real(z), options.step);
        return max_abs(RMat(d.transpose() * omega_pz * d - omega_z)) / std::max(1.0, max_abs(omega_z));
      },
      options.exec);

  PullbackResult out;
  out.form = make_result(options.reference == ReferenceForm::standard ? "pullback-symplectic" : "pullback-blowup-form",
                         form, options.form_tolerance);
  MaxReduction c;
  for (double d : conj) {
    if (d < 0.0) {
      ++c.skipped;
    } else {
      ++c.evaluated;
      c.max = std::max(c.max, d);
    }
  }
  out.conjugation = make_result("pullback-conjugation", c, options.conjugation_tolerance);
  out.divisor_skipped = form.skipped;
  return out;
}

CheckResult vector_field_relation_check(const UnitaryLoop& loop, const LocalModelParams& params,
                                        const VectorFieldOptions& options) {
  const int n = params.n();
  const double h = options.step;
  std::vector<double> magnitude(options.samples, 0.0);
  // Field of the path at time t: d/ds psi_s psi_t^{-1} p at s = t.
  auto field = [&](double t, const CVec& p) {
    const CMat inv = loop.at(t).adjoint();
    return CVec((loop.at(t + h) * (inv * p) - loop.at(t - h) * (inv * p)) / (2.0 * h));
  };
  const auto r = reduce_max(
      options.samples,
      [&](std::size_t i) -> std::optional<double> {
        SampleRng rng(options.seed, i);
        const double t = rng.uniform();
        const CVec z = random_ball_point(rng, n, params.r());
        const double s = z.norm();
        if (s < kDivisorGuard) {
          return std::nullopt;
        }
        // The lifted path acts on the chart coordinate by the same matrices.
        const CVec lifted = options.lifted_scale * field(t, z);
        const double lifted_norm = lifted.norm();
        CVec pushed = CVec::Zero(n);
        if (lifted_norm > 0.0) {
          const CVec u = lifted / lifted_norm;
          pushed = (detail::f_rho_extended(z + h * u, params) - detail::f_rho_extended(z - h * u, params)) *
                   (lifted_norm / (2.0 * h));
        }
        const double beta = beta_profile(s, params).value;
        const CVec expected = (beta / s) * field(t, z);
        const CVec at_image = field(t, f_rho(z, params));
        magnitude[i] = expected.norm();
        return std::max(max_abs(CVec(pushed - expected)), max_abs(CVec(pushed - at_image)));
      },
      options.exec);
  CheckResult out = make_result("vector-field", r, options.tolerance);
  out.reference_magnitude = *std::max_element(magnitude.begin(), magnitude.end());
  return out;
}

CheckResult near_divisor_identity_check(const LocalHamiltonian& h, const LocalModelParams& params,
                                        std::size_t samples, std::uint64_t seed, double tolerance, Exec exec) {
  const double rho2 = params.rho() * params.rho();
  const auto r = reduce_max(
      samples,
      [&](std::size_t i) -> std::optional<double> {
        SampleRng rng(seed, i);
        const CVec z = random_shell_point(rng, params.n(), 1e-6 * params.delta(), params.delta());
        const double lifted = lifted_hamiltonian(h, z, params);
        return std::abs(lifted - (h(z, 0.0) + rho2 * h.projective(z)));
      },
      exec);
  return make_result("near-divisor-identity", r, tolerance);
}

std::vector<CheckResult> divisor_branch_check(const LocalHamiltonian& h, const LocalModelParams& params,
                                              std::size_t samples, std::uint64_t seed, double tolerance,
                                              Exec exec) {
  const int n = params.n();
  const auto limit = reduce_max(
      samples,
      [&](std::size_t i) -> std::optional<double> {
        SampleRng rng(seed, i);
        const CVec w = random_shell_point(rng, n, 1.0, 1.0);
        const double on_divisor = lifted_hamiltonian(h, DivisorPoint::make(w), params);
        double dev = 0.0;
        for (double eps : {1e-6, 1e-8, 1e-10}) {
          dev = std::max(dev, std::abs(lifted_hamiltonian(h, CVec(eps * w), params) - on_divisor));
        }
        return dev;
      },
      exec);
  const auto representative = reduce_max(
      samples,
      [&](std::size_t i) -> std::optional<double> {
        SampleRng rng(seed ^ 0x5EEDULL, i);
        const CVec w = random_shell_point(rng, n, 0.1, 10.0);
        const std::complex<double> lambda = std::polar(rng.uniform(0.1, 10.0), 2.0 * std::numbers::pi * rng.uniform());
        return std::abs(lifted_hamiltonian(h, DivisorPoint::make(lambda * w), params) -
                        lifted_hamiltonian(h, DivisorPoint::make(w), params));
      },
      exec);
  return {make_result("divisor-continuity", limit, tolerance),
          make_result("divisor-representative", representative, tolerance)};
}

}  // namespace blowup
