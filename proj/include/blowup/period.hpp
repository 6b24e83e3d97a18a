#pragma once

#include <optional>
#include <string>
#include <vector>

#include "blowup/exact/integer_lattice.hpp"
#include "blowup/exact/tau_rat.hpp"

namespace blowup {

/// Z<a> (base manifold) or Z<a> + Z<tau> (one-point blow-up) inside R.
class PeriodLattice {
 public:
  /// Normalizes the generator to be positive; throws on a = 0.
  static PeriodLattice make(const Rational& a, bool includes_tau = false);

  const Rational& generator() const { return a_; }
  bool includes_tau() const { return includes_tau_; }

  bool contains(const TauRat& x) const;
  std::string describe() const;  // "Z<1>" or "Z<1/2, t>"

  bool operator==(const PeriodLattice&) const = default;

 private:
  PeriodLattice(Rational a, bool includes_tau) : a_(std::move(a)), includes_tau_(includes_tau) {}

  Rational a_;
  bool includes_tau_;
};

/// Throws std::invalid_argument("already extended") for a blow-up lattice.
PeriodLattice blowup_lattice(const PeriodLattice& base);

/// Class of value in R / lattice.
struct QuotientClass {
  TauRat value;
  PeriodLattice lattice;
};

/// Equal iff the difference of values is a lattice member. Classes living in
/// different lattices are never equal.
bool operator==(const QuotientClass& x, const QuotientClass& y);

struct ClassOrder {
  std::optional<BigInt> order;  // empty means infinite
  /// Hermite basis of the integer solutions (k, A[, B]) of
  /// k*x = A*a (+ B*tau); order is the gcd of the k-components.
  std::vector<IntVector> relations;

  bool is_infinite() const { return !order.has_value(); }
  std::string str() const { return order ? order->str() : "infinite"; }
};

/// Smallest k >= 1 with k*x in the lattice, or infinite. Decided exactly from
/// the integer solution lattice of the coefficient system; no search over k.
ClassOrder class_order(const QuotientClass& x);

}  // namespace blowup
