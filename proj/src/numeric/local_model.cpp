#include "blowup/local_model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "blowup/gauss.hpp"

namespace blowup {

namespace {

constexpr double kPi = std::numbers::pi;

// Quintic smoothstep S(u) = 6u^5 - 15u^4 + 10u^3 and S'(u) = 30u^2(1-u)^2.
double smoothstep(double u) { return u * u * u * (u * (6.0 * u - 15.0) + 10.0); }
double smoothstep_slope(double u) { return 30.0 * u * u * (1.0 - u) * (1.0 - u); }

struct Cutoff {
  double chi;
  double slope;
};

Cutoff cutoff(double s, double delta, double r) {
  const double width = r - 2.0 * delta;
  const double u = (s - delta) / width;
  return {1.0 - smoothstep(u), -smoothstep_slope(u) / width};
}

}  // namespace

RVec to_real(const CVec& z) {
  RVec x(2 * z.size());
  for (Eigen::Index j = 0; j < z.size(); ++j) {
    x[2 * j] = z[j].real();
    x[2 * j + 1] = z[j].imag();
  }
  return x;
}

CVec to_complex(const RVec& x) {
  CVec z(x.size() / 2);
  for (Eigen::Index j = 0; j < z.size(); ++j) {
    z[j] = {x[2 * j], x[2 * j + 1]};
  }
  return z;
}

RMat standard_symplectic_matrix(int n) {
  RMat j = RMat::Zero(2 * n, 2 * n);
  for (int k = 0; k < n; ++k) {
    j(2 * k, 2 * k + 1) = 1.0;
    j(2 * k + 1, 2 * k) = -1.0;
  }
  return j;
}

LocalModelParams LocalModelParams::make(int n, double rho, double delta, double r) {
  if (n < 1) {
    throw std::invalid_argument("local model needs n >= 1");
  }
  if (!(rho > 0.0) || !(delta > 0.0) || !(r > 0.0) || !std::isfinite(r)) {
    throw std::invalid_argument("local model parameters must be positive");
  }
  if (!(rho < r)) {
    throw std::invalid_argument("local model needs rho < r");
  }
  if (!(2.0 * delta < r)) {
    throw std::invalid_argument("local model needs 2*delta < r");
  }
  // beta' > 0 on the band  <=>  2s + rho^2 chi'(s) > 0.
  constexpr int kGrid = 8192;
  for (int i = 0; i <= kGrid; ++i) {
    const double s = delta + (r - 2.0 * delta) * i / kGrid;
    if (!(2.0 * s + rho * rho * cutoff(s, delta, r).slope > 0.0)) {
      throw std::invalid_argument("profile slope bound violated: beta' would vanish in the band");
    }
  }
  return LocalModelParams(n, rho, delta, r);
}

double LocalModelParams::tau() const { return kPi * rho_ * rho_; }

double LocalModelParams::uniform_slope_margin() const {
  return 2.0 * delta_ / (rho_ * rho_) - 15.0 / (8.0 * (r_ - 2.0 * delta_));
}

ProfileValue beta_profile(double s, const LocalModelParams& params) {
  if (!(s >= 0.0) || s > params.r()) {
    throw std::domain_error("beta_profile: s outside [0, r]");
  }
  const double rho2 = params.rho() * params.rho();
  if (s <= params.delta()) {
    const double b = std::sqrt(rho2 + s * s);
    return {b, s / b};
  }
  if (s >= params.r() - params.delta()) {
    return {s, 1.0};
  }
  const Cutoff c = cutoff(s, params.delta(), params.r());
  const double b = std::sqrt(rho2 * c.chi + s * s);
  return {b, (rho2 * c.slope + 2.0 * s) / (2.0 * b)};
}

namespace detail {

double beta_extended(double s, const LocalModelParams& params) {
  return s >= params.r() ? s : beta_profile(s, params).value;
}

CVec f_rho_extended(const CVec& z, const LocalModelParams& params) {
  const double s = z.norm();
  return z * (beta_extended(s, params) / s);
}

}  // namespace detail

CVec f_rho(const CVec& z, const LocalModelParams& params) {
  const double s = z.norm();
  if (s == 0.0) {
    throw std::domain_error("exceptional divisor has no chart image");
  }
  if (s > params.r()) {
    throw std::domain_error("f_rho: point outside the ball B_r");
  }
  return z * (beta_profile(s, params).value / s);
}

RMat fd_jacobian(const std::function<RVec(const RVec&)>& map, const RVec& x, double step) {
  const Eigen::Index dim = x.size();
  RMat jac(dim, dim);
  RVec xp = x;
  RVec xm = x;
  for (Eigen::Index k = 0; k < dim; ++k) {
    xp[k] = x[k] + step;
    xm[k] = x[k] - step;
    jac.col(k) = (map(xp) - map(xm)) / (2.0 * step);
    xp[k] = x[k];
    xm[k] = x[k];
  }
  return jac;
}

RMat f_rho_jacobian(const CVec& z, const LocalModelParams& params, double step) {
  return fd_jacobian([&](const RVec& x) { return to_real(detail::f_rho_extended(to_complex(x), params)); },
                     to_real(z), step);
}

double LocalHamiltonian::operator()(const CVec& z, double t) const {
  double q = 0.0;
  for (std::size_t j = 0; j < weights.size(); ++j) {
    q += static_cast<double>(weights[j]) * std::norm(z[static_cast<Eigen::Index>(j)]);
  }
  return -kPi * q + (c_of_t ? c_of_t(t) : c);
}

double LocalHamiltonian::time_averaged_constant() const {
  if (!c_of_t) {
    return c;
  }
  static const GaussRule rule = gauss_legendre(16, 0.0, 1.0);
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    acc += rule.weights[i] * c_of_t(rule.nodes[i]);
  }
  return acc;
}

double LocalHamiltonian::averaged(const CVec& z) const {
  LocalHamiltonian frozen{weights, time_averaged_constant(), {}};
  return frozen(z, 0.0);
}

double LocalHamiltonian::projective(const CVec& z) const {
  const double s2 = z.squaredNorm();
  double q = 0.0;
  for (std::size_t j = 0; j < weights.size(); ++j) {
    q += static_cast<double>(weights[j]) * std::norm(z[static_cast<Eigen::Index>(j)]);
  }
  return -kPi * q / s2;
}

DivisorPoint DivisorPoint::make(const CVec& w) {
  const double m = w.norm();
  if (!(m > 0.0)) {
    throw std::invalid_argument("divisor direction must be nonzero");
  }
  return DivisorPoint(w / m);
}

double lifted_hamiltonian(const LocalHamiltonian& h, const ChartPoint& point, const LocalModelParams& params,
                          double t) {
  if (const auto* d = std::get_if<DivisorPoint>(&point)) {
    return h(params.rho() * d->direction(), t);
  }
  return h(f_rho(std::get<CVec>(point), params), t);
}

UnitaryLoop UnitaryLoop::diagonal(std::vector<std::int64_t> weights) {
  const int n = static_cast<int>(weights.size());
  return UnitaryLoop(n, [w = std::move(weights)](double t) {
    const auto n = static_cast<Eigen::Index>(w.size());
    CMat a = CMat::Zero(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
      a(j, j) = std::polar(1.0, -2.0 * kPi * static_cast<double>(w[static_cast<std::size_t>(j)]) * t);
    }
    return a;
  });
}

UnitaryLoop UnitaryLoop::from_path(int n, std::function<CMat(double)> path) {
  const CMat id = CMat::Identity(n, n);
  const CMat a0 = path(0.0);
  if (a0.rows() != n || a0.cols() != n || (a0 - id).cwiseAbs().maxCoeff() > 1e-12) {
    throw std::invalid_argument("unitary loop must start at the identity");
  }
  constexpr int kSamples = 33;
  for (int i = 0; i <= kSamples; ++i) {
    const CMat a = path(static_cast<double>(i) / kSamples);
    if ((a.adjoint() * a - id).cwiseAbs().maxCoeff() > 1e-12) {
      throw std::invalid_argument("unitary loop: psi_t is not unitary");
    }
  }
  return UnitaryLoop(n, std::move(path));
}

}  // namespace blowup
