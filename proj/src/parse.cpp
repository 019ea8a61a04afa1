#include "curvetop/parse.hpp"

#include "curvetop/errors.hpp"

#include <cctype>

namespace curvetop {

namespace {

constexpr unsigned long kMaxExponent = 1000;

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  BiPoly parse() {
    skip();
    if (pos_ == s_.size()) fail("empty expression");
    BiPoly p = expr();
    skip();
    if (pos_ != s_.size()) {
      if (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '(') {
        fail("missing operator (implicit multiplication is not allowed)");
      }
      fail(std::string("unexpected '") + s_[pos_] + "'");
    }
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  BiPoly expr() {
    BiPoly acc = term();
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  BiPoly term() {
    BiPoly acc = unary();
    while (accept('*')) acc = acc * unary();
    return acc;
  }

  BiPoly unary() {
    if (accept('-')) return BiPoly() - unary();
    if (accept('+')) return unary();
    return power();
  }

  BiPoly power() {
    BiPoly base = atom();
    if (accept('^')) {
      skip();
      const std::size_t start = pos_;
      const std::string digits = integer_literal();
      if (digits.empty()) fail("exponent must be a non-negative integer");
      if (digits.size() > 4 || std::stoul(digits) > kMaxExponent) {
        pos_ = start;
        fail("exponent too large");
      }
      return base.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  std::string integer_literal() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  BiPoly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      BiPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == 'x' || c == 'y') {
      ++pos_;
      return c == 'x' ? BiPoly::x() : BiPoly::y();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::string digits = integer_literal();
      if (pos_ < s_.size() && (s_[pos_] == '.' || s_[pos_] == '/')) {
        fail("non-integer coefficient");
      }
      return BiPoly::constant(Integer(digits));
    }
    if (c == '.') fail("non-integer coefficient");
    fail(std::string("unexpected '") + c + "'");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

BiPoly parse_poly(const std::string& text) { return Parser(text).parse(); }

}  // namespace curvetop
