#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "blowup/exact/tau_poly.hpp"

namespace blowup {

/// Element of the rational-function field Q(tau). Always held in canonical
/// form: numerator and denominator coprime, denominator monic, zero stored as
/// 0/1. Structural equality is therefore equality in Q(tau).
class TauRat {
 public:
  TauRat() : den_(Rational(1)) {}
  TauRat(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT(google-explicit-constructor)
  TauRat(long long c) : TauRat(Rational(c)) {}               // NOLINT(google-explicit-constructor)
  explicit TauRat(TauPoly p) : num_(std::move(p)), den_(Rational(1)) {}

  static TauRat tau() { return TauRat(TauPoly::tau()); }

  const TauPoly& num() const { return num_; }
  const TauPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  TauRat inverse() const;

  TauRat operator-() const;
  TauRat& operator+=(const TauRat& rhs);
  TauRat& operator-=(const TauRat& rhs);
  TauRat& operator*=(const TauRat& rhs);
  TauRat& operator/=(const TauRat& rhs);

  friend TauRat operator+(TauRat lhs, const TauRat& rhs) { return lhs += rhs; }
  friend TauRat operator-(TauRat lhs, const TauRat& rhs) { return lhs -= rhs; }
  friend TauRat operator*(TauRat lhs, const TauRat& rhs) { return lhs *= rhs; }
  friend TauRat operator/(TauRat lhs, const TauRat& rhs) { return lhs /= rhs; }

  bool operator==(const TauRat& rhs) const = default;

  /// Exact substitution tau = t; throws std::domain_error at a pole.
  Rational eval(const Rational& t) const;

  /// Floating evaluation at tau = t. Throws std::domain_error("evaluation at
  /// pole") when the denominator vanishes to within roundoff.
  double eval_at(double t) const;

 private:
  friend TauRat canonicalize(TauPoly num, TauPoly den);

  TauRat(TauPoly num, TauPoly den) : num_(std::move(num)), den_(std::move(den)) {}

  TauPoly num_;
  TauPoly den_;
};

/// The unique coprime, monic-denominator representative of num/den.
/// Throws std::domain_error("division by zero") if den is zero.
TauRat canonicalize(TauPoly num, TauPoly den);

TauRat pow(const TauRat& base, unsigned exponent);

inline double eval_at(const TauRat& x, double tau0) { return x.eval_at(tau0); }

/// Renders numerator and denominator as integer polynomials in "t" with a
/// common integer content removed, e.g. "(t^2 + t + 1)/(2*t + 2)".
std::string render(const TauRat& x);
std::string render(const TauPoly& p);

/// Parses the rendering grammar (and any well-formed expression in t built
/// from integers, + - * / ^ and parentheses). Throws std::invalid_argument.
TauRat parse_tau_rat(std::string_view text);

std::ostream& operator<<(std::ostream& os, const TauRat& x);

}  // namespace blowup
