#include <cctype>
#include <stdexcept>
#include <string>

#include "blowup/exact/tau_rat.hpp"

namespace blowup {

namespace {

// expr    := term (('+' | '-') term)*
// term    := unary (('*' | '/') unary)*
// unary   := ('+' | '-') unary | power
// power   := primary ('^' digits)?
// primary := digits | 't' | '(' expr ')'
class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  TauRat parse() {
    TauRat value = expr();
    skip_space();
    if (pos_ != text_.size()) {
      fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    }
    return value;
  }

 private:
  TauRat expr() {
    TauRat acc = term();
    while (true) {
      skip_space();
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  TauRat term() {
    TauRat acc = unary();
    while (true) {
      skip_space();
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        TauRat rhs = unary();
        if (rhs.is_zero()) {
          fail("division by zero");
        }
        acc /= rhs;
      } else {
        return acc;
      }
    }
  }

  TauRat unary() {
    skip_space();
    if (accept('-')) {
      return -unary();
    }
    if (accept('+')) {
      return unary();
    }
    return power();
  }

  TauRat power() {
    TauRat base = primary();
    skip_space();
    if (accept('^')) {
      skip_space();
      const BigInt e = digits();
      if (e > 4096) {
        fail("exponent too large");
      }
      return pow(base, e.convert_to<unsigned>());
    }
    return base;
  }

  TauRat primary() {
    skip_space();
    if (pos_ >= text_.size()) {
      fail("unexpected end of input");
    }
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return TauRat(Rational(digits()));
    }
    if (c == 't') {
      ++pos_;
      return TauRat::tau();
    }
    if (accept('(')) {
      TauRat inner = expr();
      skip_space();
      if (!accept(')')) {
        fail("expected ')'");
      }
      return inner;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  BigInt digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) {
      fail("expected digits");
    }
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  bool accept(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("cannot parse '" + std::string(text_) + "' at offset " + std::to_string(pos_) +
                                ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

TauRat parse_tau_rat(std::string_view text) { return Parser(text).parse(); }

}  // namespace blowup
