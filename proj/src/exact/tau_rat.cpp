#include "blowup/exact/tau_rat.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace blowup {

TauRat canonicalize(TauPoly num, TauPoly den) {
  if (den.is_zero()) {
    throw std::domain_error("division by zero");
  }
  if (num.is_zero()) {
    return TauRat();
  }
  const TauPoly g = gcd(num, den);
  if (g.degree() > 0) {
    num = divmod(num, g).first;
    den = divmod(den, g).first;
  }
  const Rational lead_inv = 1 / den.leading();
  return TauRat(num.scaled(lead_inv), den.scaled(lead_inv));
}

TauRat TauRat::inverse() const { return canonicalize(den_, num_); }

TauRat TauRat::operator-() const { return TauRat(-num_, den_); }

TauRat& TauRat::operator+=(const TauRat& rhs) {
  if (den_ == rhs.den_) {
    *this = canonicalize(num_ + rhs.num_, den_);
  } else {
    *this = canonicalize(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
  }
  return *this;
}

TauRat& TauRat::operator-=(const TauRat& rhs) { return *this += -rhs; }

TauRat& TauRat::operator*=(const TauRat& rhs) {
  *this = canonicalize(num_ * rhs.num_, den_ * rhs.den_);
  return *this;
}

TauRat& TauRat::operator/=(const TauRat& rhs) {
  *this = canonicalize(num_ * rhs.den_, den_ * rhs.num_);
  return *this;
}

Rational TauRat::eval(const Rational& t) const {
  const Rational d = den_.eval(t);
  if (d == 0) {
    throw std::domain_error("evaluation at pole");
  }
  return num_.eval(t) / d;
}

double TauRat::eval_at(double t) const {
  const double d = den_.eval(t);
  const double scale = den_.eval_magnitude(t);
  if (!(std::abs(d) > 64 * std::numeric_limits<double>::epsilon() * scale)) {
    throw std::domain_error("evaluation at pole");
  }
  return num_.eval(t) / d;
}

TauRat pow(const TauRat& base, unsigned exponent) {
  return canonicalize(pow(base.num(), exponent), pow(base.den(), exponent));
}

namespace {

// Writes an integer-coefficient polynomial; coefficients are already scaled.
std::string render_integer_poly(const std::vector<BigInt>& c) {
  std::ostringstream os;
  bool first = true;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
    if (c[i] == 0) {
      continue;
    }
    BigInt mag = abs(c[i]);
    if (first) {
      if (c[i] < 0) {
        os << "-";
      }
    } else {
      os << (c[i] < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) {
      os << mag << "*";
    }
    os << "t";
    if (i > 1) {
      os << "^" << i;
    }
  }
  return first ? std::string("0") : os.str();
}

std::size_t term_count(const std::vector<BigInt>& c) {
  std::size_t n = 0;
  for (const auto& x : c) {
    n += (x != 0);
  }
  return n;
}

// Scales num and den by a common rational so all coefficients are integers
// with overall content one.
std::pair<std::vector<BigInt>, std::vector<BigInt>> integer_content_normalized(const TauPoly& num,
                                                                                const TauPoly& den) {
  BigInt l = 1;
  for (const auto* p : {&num, &den}) {
    for (const auto& c : p->coefficients()) {
      l = lcm_of(l, denominator(c));
    }
  }
  auto scale = [&](const TauPoly& p) {
    std::vector<BigInt> out;
    out.reserve(p.coefficients().size());
    for (const auto& c : p.coefficients()) {
      out.push_back(numerator(c) * (l / denominator(c)));
    }
    return out;
  };
  std::vector<BigInt> n = scale(num);
  std::vector<BigInt> d = scale(den);
  BigInt g = 0;
  for (const auto* v : {&n, &d}) {
    for (const auto& x : *v) {
      g = gcd(g, abs(x));
    }
  }
  if (g > 1) {
    for (auto* v : {&n, &d}) {
      for (auto& x : *v) {
        x /= g;
      }
    }
  }
  return {std::move(n), std::move(d)};
}

}  // namespace

std::string render(const TauRat& x) {
  if (x.is_zero()) {
    return "0";
  }
  auto [n, d] = integer_content_normalized(x.num(), x.den());
  const std::string ns = render_integer_poly(n);
  if (d.size() == 1 && d[0] == 1) {
    return ns;
  }
  const std::string ds = render_integer_poly(d);
  const std::string nwrap = term_count(n) > 1 ? "(" + ns + ")" : ns;
  const std::string dwrap = term_count(d) > 1 || d.size() > 1 ? "(" + ds + ")" : ds;
  return nwrap + "/" + dwrap;
}

std::string render(const TauPoly& p) { return render(TauRat(p)); }

std::ostream& operator<<(std::ostream& os, const TauRat& x) { return os << render(x); }

}  // namespace blowup
