#pragma once

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "blowup/exact/rational.hpp"

namespace blowup {

/// Univariate polynomial over Q in the formal variable tau (which stands for
/// pi*rho^2). Coefficient i multiplies tau^i; the highest stored coefficient
/// is always nonzero, so the zero polynomial has no coefficients.
class TauPoly {
 public:
  TauPoly() = default;
  explicit TauPoly(std::vector<Rational> coefficients);
  TauPoly(std::initializer_list<Rational> coefficients) : TauPoly(std::vector<Rational>(coefficients)) {}
  TauPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  TauPoly(long long constant) : TauPoly(Rational(constant)) {}  // NOLINT

  static TauPoly monomial(const Rational& c, std::size_t degree);
  static TauPoly tau() { return monomial(Rational(1), 1); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  /// Zero beyond the degree.
  const Rational& coeff(std::size_t i) const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  const Rational& leading() const;

  TauPoly monic() const;
  TauPoly scaled(const Rational& c) const;
  TauPoly shifted(std::size_t k) const;  // multiply by tau^k

  Rational eval(const Rational& t) const;
  double eval(double t) const;
  /// Sum of |c_i| |t|^i, used as the roundoff scale of eval(double).
  double eval_magnitude(double t) const;

  TauPoly operator-() const;
  TauPoly& operator+=(const TauPoly& rhs);
  TauPoly& operator-=(const TauPoly& rhs);
  TauPoly& operator*=(const TauPoly& rhs);

  friend TauPoly operator+(TauPoly lhs, const TauPoly& rhs) { return lhs += rhs; }
  friend TauPoly operator-(TauPoly lhs, const TauPoly& rhs) { return lhs -= rhs; }
  friend TauPoly operator*(TauPoly lhs, const TauPoly& rhs) { return lhs *= rhs; }

  bool operator==(const TauPoly& rhs) const = default;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

TauPoly pow(const TauPoly& base, unsigned exponent);

/// Euclidean division; throws std::domain_error("division by zero") for a
/// zero divisor.
std::pair<TauPoly, TauPoly> divmod(const TauPoly& dividend, const TauPoly& divisor);

/// Monic gcd; gcd(0, 0) = 0.
TauPoly gcd(TauPoly a, TauPoly b);

}  // namespace blowup
