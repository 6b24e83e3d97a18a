#pragma once

#include <optional>
#include <utility>

#include "blowup/exact/tau_rat.hpp"

namespace blowup {

struct LatticeCoordinates {
  BigInt A;  // coefficient of the period generator a
  BigInt B;  // coefficient of tau
  bool operator==(const LatticeCoordinates&) const = default;
};

/// Integers (A, B) with x = A*a + B*tau in Q(tau), if they exist. Compares
/// coefficients of num(x) = (A*a + B*tau) * den(x) and solves the resulting
/// linear system over Q, then tests integrality.
/// Throws std::invalid_argument("degenerate period generator") when a = 0.
std::optional<LatticeCoordinates> membership_in_lattice(const TauRat& x, const Rational& a);

/// Same question for Z<a> alone (no tau generator).
std::optional<BigInt> membership_in_base_lattice(const TauRat& x, const Rational& a);

}  // namespace blowup
