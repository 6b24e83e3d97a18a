#include "blowup/exact/lattice_membership.hpp"

#include <stdexcept>

#include "blowup/exact/integer_lattice.hpp"

namespace blowup {

std::optional<LatticeCoordinates> membership_in_lattice(const TauRat& x, const Rational& a) {
  if (a == 0) {
    throw std::invalid_argument("degenerate period generator");
  }
  if (x.is_zero()) {
    return LatticeCoordinates{0, 0};
  }
  const TauPoly& p = x.num();
  const TauPoly& d = x.den();
  // Coefficient of tau^i:  p_i = A * a * d_i + B * d_{i-1}.
  const std::size_t rows = static_cast<std::size_t>(std::max(p.degree(), d.degree() + 1)) + 1;
  std::vector<RationalVector> m;
  RationalVector rhs;
  m.reserve(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    m.push_back({a * d.coeff(i), i == 0 ? Rational(0) : d.coeff(i - 1)});
    rhs.push_back(p.coeff(i));
  }
  const auto sol = solve_unique(std::move(m), std::move(rhs));
  if (!sol || !is_integer((*sol)[0]) || !is_integer((*sol)[1])) {
    return std::nullopt;
  }
  return LatticeCoordinates{numerator((*sol)[0]), numerator((*sol)[1])};
}

std::optional<BigInt> membership_in_base_lattice(const TauRat& x, const Rational& a) {
  const auto c = membership_in_lattice(x, a);
  if (!c || c->B != 0) {
    return std::nullopt;
  }
  return c->A;
}

}  // namespace blowup
