#include "blowup/weinstein.hpp"

#include <cmath>
#include <stdexcept>

namespace blowup {

ManifoldSpec ManifoldSpec::make(int n, const Rational& volume, const Rational& period,
                                std::optional<double> gromov_width) {
  if (n < 2) {
    throw std::invalid_argument("manifold dimension must satisfy n >= 2 (tau and tau^n must not collide)");
  }
  if (volume <= 0) {
    throw std::invalid_argument("manifold volume must be positive");
  }
  if (period == 0) {
    throw std::invalid_argument("degenerate period generator");
  }
  if (gromov_width && !(*gromov_width > 0.0 && std::isfinite(*gromov_width))) {
    throw std::invalid_argument("gromov width bound must be positive");
  }
  ManifoldSpec m;
  m.n_ = n;
  m.volume_ = volume;
  m.period_ = period < 0 ? Rational(-period) : period;
  m.gromov_width_ = gromov_width;
  return m;
}

TauRat ManifoldSpec::blowup_volume() const {
  return TauRat(TauPoly(volume_) - TauPoly::monomial(Rational(1), static_cast<std::size_t>(n_)));
}

BigInt CircleLoopSpec::weight_sum() const {
  BigInt k = 0;
  for (auto m : weights) {
    k += m;
  }
  return k;
}

void check_loop_matches(const CircleLoopSpec& loop, const ManifoldSpec& manifold) {
  if (loop.weights.size() != static_cast<std::size_t>(manifold.n())) {
    throw std::invalid_argument("loop '" + loop.name + "' has " + std::to_string(loop.weights.size()) +
                                " weights, manifold needs " + std::to_string(manifold.n()));
  }
}

TauRat ball_integral_closed_form(const CircleLoopSpec& loop, const ManifoldSpec& manifold) {
  const auto n = static_cast<std::size_t>(manifold.n());
  const Rational k_term = Rational(loop.weight_sum()) / Rational(factorial(static_cast<unsigned>(n + 1)));
  return TauRat(TauPoly::monomial(-k_term, n + 1) + TauPoly::monomial(loop.C, n));
}

WeinsteinValue lift_value_general(const TauRat& base, const TauRat& time_integral, const ManifoldSpec& manifold) {
  return WeinsteinValue{base, base + time_integral / manifold.blowup_volume(),
                        blowup_lattice(PeriodLattice::make(manifold.period()))};
}

WeinsteinValue lift_value_circle(const CircleLoopSpec& loop, const ManifoldSpec& manifold) {
  check_loop_matches(loop, manifold);
  return lift_value_general(TauRat(loop.C), ball_integral_closed_form(loop, manifold), manifold);
}

BigInt circle_loop_order(const CircleLoopSpec& loop, const ManifoldSpec& manifold) {
  return denominator(Rational(loop.C / manifold.period()));
}

TauRat calabi_lift(const TauRat& base_cal, const CircleLoopSpec& loop, const ManifoldSpec& manifold) {
  check_loop_matches(loop, manifold);
  const Rational inv_fact = Rational(1) / Rational(factorial(static_cast<unsigned>(manifold.n())));
  return base_cal - ball_integral_closed_form(loop, manifold) * TauRat(inv_fact);
}

}  // namespace blowup
