#include "blowup/period.hpp"

#include <stdexcept>

#include "blowup/exact/lattice_membership.hpp"

namespace blowup {

PeriodLattice PeriodLattice::make(const Rational& a, bool includes_tau) {
  if (a == 0) {
    throw std::invalid_argument("degenerate period generator");
  }
  return PeriodLattice(a < 0 ? Rational(-a) : a, includes_tau);
}

bool PeriodLattice::contains(const TauRat& x) const {
  if (includes_tau_) {
    return membership_in_lattice(x, a_).has_value();
  }
  return membership_in_base_lattice(x, a_).has_value();
}

std::string PeriodLattice::describe() const {
  return "Z<" + format_rational(a_) + (includes_tau_ ? ", t>" : ">");
}

PeriodLattice blowup_lattice(const PeriodLattice& base) {
  if (base.includes_tau()) {
    throw std::invalid_argument("already extended");
  }
  return PeriodLattice::make(base.generator(), true);
}

bool operator==(const QuotientClass& x, const QuotientClass& y) {
  return x.lattice == y.lattice && x.lattice.contains(x.value - y.value);
}

ClassOrder class_order(const QuotientClass& x) {
  const TauPoly& p = x.value.num();
  const TauPoly& d = x.value.den();
  const Rational& a = x.lattice.generator();
  const bool with_tau = x.lattice.includes_tau();
  // Unknowns (k, A[, B]):  k*p_i - A*a*d_i - B*d_{i-1} = 0 for every i.
  const std::size_t cols = with_tau ? 3 : 2;
  const std::size_t rows = static_cast<std::size_t>(std::max(p.degree(), d.degree() + 1)) + 1;
  std::vector<RationalVector> m;
  for (std::size_t i = 0; i < rows; ++i) {
    RationalVector row{p.coeff(i), -a * d.coeff(i)};
    if (with_tau) {
      row.push_back(i == 0 ? Rational(0) : Rational(-d.coeff(i - 1)));
    }
    m.push_back(std::move(row));
  }
  ClassOrder out;
  out.relations = integer_kernel(m, cols);
  BigInt g = 0;
  for (const auto& v : out.relations) {
    g = gcd(g, abs(v[0]));
  }
  if (g != 0) {
    out.order = g;
  }
  return out;
}

}  // namespace blowup
