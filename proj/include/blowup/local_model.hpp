#pragma once

#include <cstdint>
#include <functional>
#include <variant>
#include <vector>

#include <Eigen/Dense>

namespace blowup {

using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;
using RVec = Eigen::VectorXd;
using RMat = Eigen::MatrixXd;

/// C^n -> R^{2n} as (x_1, y_1, ..., x_n, y_n).
RVec to_real(const CVec& z);
CVec to_complex(const RVec& x);

/// Matrix of omega_0 in real coordinates: omega_0(u, v) = u^T J v.
RMat standard_symplectic_matrix(int n);

/// Local model of the blow-up of weight rho inside B_r, with the profile
/// beta(s) = sqrt(rho^2 chi(s) + s^2). chi is 1 on [0, delta], 0 on
/// [r - delta, r] and a quintic smoothstep in between.
class LocalModelParams {
 public:
  /// Throws std::invalid_argument unless 0 < rho < r, 0 < delta, 2 delta < r
  /// and beta' > 0 across the interpolation band.
  static LocalModelParams make(int n, double rho, double delta, double r);

  int n() const { return n_; }
  double rho() const { return rho_; }
  double delta() const { return delta_; }
  double r() const { return r_; }
  double tau() const;  // pi rho^2

  /// 2 delta / rho^2 - max|chi'|. Positive means the uniform (sufficient)
  /// slope bound holds; the constructor only needs the pointwise condition.
  double uniform_slope_margin() const;

 private:
  LocalModelParams(int n, double rho, double delta, double r) : n_(n), rho_(rho), delta_(delta), r_(r) {}

  int n_;
  double rho_;
  double delta_;
  double r_;
};

struct ProfileValue {
  double value;
  double derivative;
};

/// Throws std::domain_error for s outside [0, r].
ProfileValue beta_profile(double s, const LocalModelParams& params);

/// F(z) = beta(|z|) z / |z| on the punctured ball 0 < |z| <= r. Throws
/// std::domain_error("exceptional divisor has no chart image") at z = 0.
CVec f_rho(const CVec& z, const LocalModelParams& params);

namespace detail {
// Same formulas with beta extended by the identity beyond r, for finite
// differences that step past the boundary.
double beta_extended(double s, const LocalModelParams& params);
CVec f_rho_extended(const CVec& z, const LocalModelParams& params);
}  // namespace detail

/// Central-difference Jacobian of a map R^{2n} -> R^{2n}.
RMat fd_jacobian(const std::function<RVec(const RVec&)>& map, const RVec& x, double step = 1e-5);

/// Jacobian of F in real coordinates, by central differences.
RMat f_rho_jacobian(const CVec& z, const LocalModelParams& params, double step = 1e-5);

/// H_t(z) = -pi sum m_j |z_j|^2 + c_t. With no time profile, c_t = c.
struct LocalHamiltonian {
  std::vector<std::int64_t> weights;
  double c = 0.0;
  std::function<double(double)> c_of_t;

  double operator()(const CVec& z, double t) const;
  /// Time-averaged Hamiltonian: the constant replaced by its mean C.
  double averaged(const CVec& z) const;
  double time_averaged_constant() const;
  /// Induced Hamiltonian on CP^{n-1}: -pi sum m_j |z_j|^2 / |z|^2.
  double projective(const CVec& z) const;
};

/// A point [w] of the exceptional divisor, stored with |w| = 1.
class DivisorPoint {
 public:
  /// Throws std::invalid_argument for w = 0.
  static DivisorPoint make(const CVec& w);
  const CVec& direction() const { return w_; }

 private:
  explicit DivisorPoint(CVec w) : w_(std::move(w)) {}
  CVec w_;
};

/// Either a chart point z != 0 of L_r \ E or a divisor point.
using ChartPoint = std::variant<CVec, DivisorPoint>;

/// H o F off the divisor, H(rho w / |w|) on it.
double lifted_hamiltonian(const LocalHamiltonian& h, const ChartPoint& point, const LocalModelParams& params,
                          double t = 0.0);

/// A loop of unitary matrices psi_t with psi_0 = I.
class UnitaryLoop {
 public:
  /// psi_t = diag(exp(-2 pi i m_j t)).
  static UnitaryLoop diagonal(std::vector<std::int64_t> weights);
  /// Throws std::invalid_argument if psi_0 != I or psi_t is not unitary (to
  /// 1e-12) at the sampled times.
  static UnitaryLoop from_path(int n, std::function<CMat(double)> path);

  int n() const { return n_; }
  CMat at(double t) const { return path_(t); }

 private:
  UnitaryLoop(int n, std::function<CMat(double)> path) : n_(n), path_(std::move(path)) {}

  int n_;
  std::function<CMat(double)> path_;
};

}  // namespace blowup
