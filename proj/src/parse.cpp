#include <cctype>
#include <string>

#include "poincare/errors.hpp"
#include "poincare/poly.hpp"

namespace poincare {
namespace {

// Recursive-descent parser over the polynomial grammar. A leading sign on a
// term is accepted so that printed polynomials ("-x^2 + 1") read back.
class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  BivariatePoly parse() {
    BivariatePoly r = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  BivariatePoly expr() {
    BivariatePoly acc;
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    BivariatePoly t = term();
    acc = negate ? -t : t;
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        break;
      }
    }
    return acc;
  }

  BivariatePoly term() {
    BivariatePoly acc = factor();
    while (accept('*')) acc *= factor();
    return acc;
  }

  BivariatePoly factor() {
    BivariatePoly b = base();
    if (accept('^')) {
      skip_ws();
      const std::size_t start = pos_;
      unsigned long e = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        e = e * 10 + static_cast<unsigned long>(text_[pos_] - '0');
        if (e > kMaxParsedExponent) {
          pos_ = start;
          fail("exponent overflow (max " + std::to_string(kMaxParsedExponent) + ")");
        }
        ++pos_;
      }
      if (pos_ == start) fail("expected non-negative integer exponent");
      return pow(b, static_cast<unsigned>(e));
    }
    return b;
  }

  BivariatePoly base() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == 'x') {
      ++pos_;
      return BivariatePoly::var_x();
    }
    if (c == 'y') {
      ++pos_;
      return BivariatePoly::var_y();
    }
    if (c == '(') {
      ++pos_;
      BivariatePoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return BivariatePoly(rational());
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  Rational rational() {
    auto digits = [&] {
      const std::size_t s = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return std::string(text_.substr(s, pos_ - s));
    };
    std::string num = digits();
    Rational r{mpz_class(num, 10)};
    const std::size_t before_slash = pos_;
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      skip_ws();
      const std::size_t den_start = pos_;
      std::string den = digits();
      if (den.empty()) fail("expected denominator");
      mpz_class d(den, 10);
      if (d == 0) {
        pos_ = den_start;
        fail("zero denominator");
      }
      r = Rational(mpz_class(num, 10), d);
      r.canonicalize();
    } else {
      pos_ = before_slash;
    }
    return r;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

BivariatePoly parse_poly(std::string_view text) { return Parser(text).parse(); }

}  // namespace poincare
