#include "blowup/exact/tau_poly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace blowup {

namespace {
const Rational kZero(0);
}

TauPoly::TauPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

TauPoly::TauPoly(const Rational& constant) {
  if (constant != 0) {
    coeffs_.push_back(constant);
  }
}

TauPoly TauPoly::monomial(const Rational& c, std::size_t degree) {
  if (c == 0) {
    return {};
  }
  std::vector<Rational> coeffs(degree + 1, Rational(0));
  coeffs[degree] = c;
  return TauPoly(std::move(coeffs));
}

const Rational& TauPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : kZero; }

const Rational& TauPoly::leading() const { return coeffs_.empty() ? kZero : coeffs_.back(); }

TauPoly TauPoly::monic() const {
  if (is_zero()) {
    return {};
  }
  return scaled(1 / leading());
}

TauPoly TauPoly::scaled(const Rational& c) const {
  if (c == 0) {
    return {};
  }
  TauPoly out = *this;
  for (auto& x : out.coeffs_) {
    x *= c;
  }
  return out;
}

TauPoly TauPoly::shifted(std::size_t k) const {
  if (is_zero()) {
    return {};
  }
  std::vector<Rational> coeffs(k, Rational(0));
  coeffs.insert(coeffs.end(), coeffs_.begin(), coeffs_.end());
  return TauPoly(std::move(coeffs));
}

Rational TauPoly::eval(const Rational& t) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * t + *it;
  }
  return acc;
}

double TauPoly::eval(double t) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * t + to_double(*it);
  }
  return acc;
}

double TauPoly::eval_magnitude(double t) const {
  double acc = 0.0;
  const double at = std::abs(t);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * at + std::abs(to_double(*it));
  }
  return acc;
}

TauPoly TauPoly::operator-() const { return scaled(Rational(-1)); }

TauPoly& TauPoly::operator+=(const TauPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) {
    coeffs_.resize(rhs.coeffs_.size(), Rational(0));
  }
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
    coeffs_[i] += rhs.coeffs_[i];
  }
  trim();
  return *this;
}

TauPoly& TauPoly::operator-=(const TauPoly& rhs) { return *this += -rhs; }

TauPoly& TauPoly::operator*=(const TauPoly& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) {
      continue;
    }
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

void TauPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) {
    coeffs_.pop_back();
  }
}

TauPoly pow(const TauPoly& base, unsigned exponent) {
  TauPoly out(Rational(1));
  TauPoly b = base;
  while (exponent > 0) {
    if (exponent & 1U) {
      out *= b;
    }
    exponent >>= 1U;
    if (exponent > 0) {
      b *= b;
    }
  }
  return out;
}

std::pair<TauPoly, TauPoly> divmod(const TauPoly& dividend, const TauPoly& divisor) {
  if (divisor.is_zero()) {
    throw std::domain_error("division by zero");
  }
  const int dd = divisor.degree();
  if (dividend.degree() < dd) {
    return {TauPoly(), dividend};
  }
  std::vector<Rational> rem = dividend.coefficients();
  std::vector<Rational> quot(rem.size() - dd, Rational(0));
  const Rational lead_inv = 1 / divisor.leading();
  for (int k = static_cast<int>(rem.size()) - 1; k >= dd; --k) {
    if (rem[k] == 0) {
      continue;
    }
    const Rational q = rem[k] * lead_inv;
    quot[k - dd] = q;
    for (int j = 0; j <= dd; ++j) {
      rem[k - dd + j] -= q * divisor.coeff(j);
    }
  }
  rem.resize(dd);
  return {TauPoly(std::move(quot)), TauPoly(std::move(rem))};
}

TauPoly gcd(TauPoly a, TauPoly b) {
  while (!b.is_zero()) {
    TauPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

}  // namespace blowup
