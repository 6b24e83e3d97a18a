#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "blowup/exact/tau_rat.hpp"
#include "blowup/period.hpp"

namespace blowup {

/// Closed base manifold data: n = half the real dimension, V = int_M omega^n,
/// a = generator of the (cyclic) period group.
class ManifoldSpec {
 public:
  /// Throws std::invalid_argument unless n >= 2, V > 0, a != 0 and any
  /// Gromov width bound is positive. The generator is normalized positive.
  static ManifoldSpec make(int n, const Rational& volume, const Rational& period,
                           std::optional<double> gromov_width = std::nullopt);

  int n() const { return n_; }
  const Rational& volume() const { return volume_; }
  const Rational& period() const { return period_; }
  const std::optional<double>& gromov_width() const { return gromov_width_; }

  /// V - tau^n = Vol of the blow-up.
  TauRat blowup_volume() const;

 private:
  ManifoldSpec() = default;

  int n_ = 2;
  Rational volume_;
  Rational period_;
  std::optional<double> gromov_width_;
};

/// An iota-circle loop: near x0 its normalized Hamiltonian is
/// -pi * sum m_j |z_j|^2 + c_t with time average C.
struct CircleLoopSpec {
  std::string name;
  std::vector<std::int64_t> weights;
  Rational C;

  BigInt weight_sum() const;  // K(psi, x0)
};

struct WeinsteinValue {
  TauRat base_value;
  TauRat lifted_value;
  PeriodLattice lattice;  // the lattice lifted_value is read in

  QuotientClass lifted_class() const { return {lifted_value, lattice}; }
};

/// int_0^1 int_{B_rho} H_t omega_0^n dt = -K tau^{n+1}/(n+1)! + C tau^n.
TauRat ball_integral_closed_form(const CircleLoopSpec& loop, const ManifoldSpec& manifold);

/// base + time_integral / (V - tau^n), over the blow-up lattice.
WeinsteinValue lift_value_general(const TauRat& base, const TauRat& time_integral, const ManifoldSpec& manifold);

/// Base value C; lifted value via the closed-form ball integral.
WeinsteinValue lift_value_circle(const CircleLoopSpec& loop, const ManifoldSpec& manifold);

/// n(psi): order of [C] in R/Z<a>, i.e. the denominator of C/a.
BigInt circle_loop_order(const CircleLoopSpec& loop, const ManifoldSpec& manifold);

/// Cal(psi~) = Cal(psi) - (1/n!) * ball integral. Not quotiented.
TauRat calabi_lift(const TauRat& base_cal, const CircleLoopSpec& loop, const ManifoldSpec& manifold);

/// Throws std::invalid_argument if the loop's weight count differs from n.
void check_loop_matches(const CircleLoopSpec& loop, const ManifoldSpec& manifold);

}  // namespace blowup
