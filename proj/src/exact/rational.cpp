#include "blowup/exact/rational.hpp"

#include <regex>
#include <stdexcept>

namespace blowup {

Rational parse_rational(std::string_view text) {
  static const std::regex pattern(R"(^\s*([+-]?)(\d+)(?:/(\d+))?\s*$)");
  std::match_results<std::string_view::const_iterator> m;
  if (!std::regex_match(text.begin(), text.end(), m, pattern)) {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  BigInt num(m[2].str());
  BigInt den(1);
  if (m[3].matched) {
    den = BigInt(m[3].str());
  }
  if (den == 0) {
    throw std::invalid_argument("zero denominator in rational: '" + std::string(text) + "'");
  }
  if (m[1].str() == "-") {
    num = -num;
  }
  return Rational(num, den);
}

std::string format_rational(const Rational& q) {
  const BigInt& d = denominator(q);
  if (d == 1) {
    return numerator(q).str();
  }
  return numerator(q).str() + "/" + d.str();
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

bool is_integer(const Rational& q) { return denominator(q) == 1; }

BigInt lcm_of(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) {
    return 0;
  }
  return abs(a / gcd(a, b) * b);
}

BigInt factorial(unsigned n) {
  BigInt out = 1;
  for (unsigned k = 2; k <= n; ++k) {
    out *= k;
  }
  return out;
}

}  // namespace blowup
