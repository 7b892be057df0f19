#include "ellk3/algebra.hpp"

#include <cctype>

namespace ellk3 {
namespace {

class PolyParser {
 public:
  PolyParser(std::string_view s, int p, char var) : s_(s), p_(p), var_(var) {}

  Poly parse_all() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("empty polynomial", pos_);
    Poly r = expr();
    skip();
    if (pos_ < s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return r;
  }

  // Stops at a top-level '/' so rational functions can reuse the parser.
  Poly parse_until_slash(std::size_t& pos) {
    pos_ = pos;
    skip();
    if (pos_ >= s_.size() || s_[pos_] == '/') throw ParseError("empty polynomial", pos_);
    Poly r = expr();
    skip();
    pos = pos_;
    return r;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool starts_factor() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == var_ || c == '(';
  }

  Poly expr() {
    Poly acc = term();
    for (;;) {
      skip();
      if (pos_ >= s_.size()) return acc;
      char c = s_[pos_];
      if (c == '+') {
        ++pos_;
        acc = acc + term();
      } else if (c == '-') {
        ++pos_;
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = unary();
    for (;;) {
      skip();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        acc = acc * unary();
      } else if (starts_factor()) {
        acc = acc * power();
      } else {
        return acc;
      }
    }
  }

  Poly unary() {
    skip();
    if (pos_ < s_.size() && s_[pos_] == '-') {
      ++pos_;
      return -unary();
    }
    if (pos_ < s_.size() && s_[pos_] == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  Poly power() {
    Poly base = atom();
    skip();
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      skip();
      std::size_t at = pos_;
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        throw ParseError("expected exponent", at);
      }
      long long e = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        e = e * 10 + (s_[pos_] - '0');
        if (e > 100000) throw ParseError("exponent too large", at);
        ++pos_;
      }
      return pow(base, static_cast<int>(e));
    }
    return base;
  }

  Poly atom() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::int64_t v = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        v = (v * 10 + (s_[pos_] - '0')) % p_;
        ++pos_;
      }
      return Poly::constant(p_, v);
    }
    if (c == var_) {
      ++pos_;
      return Poly::t(p_);
    }
    if (c == '(') {
      std::size_t open = pos_;
      ++pos_;
      Poly inner = expr();
      skip();
      if (pos_ >= s_.size() || s_[pos_] != ')') throw ParseError("unbalanced '(' opened", open);
      ++pos_;
      return inner;
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view s_;
  int p_;
  char var_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, int p, char var) {
  require_prime(p);
  return PolyParser(text, p, var).parse_all();
}

RatFunc parse_ratfunc(std::string_view text, int p, char var) {
  require_prime(p);
  PolyParser parser(text, p, var);
  std::size_t pos = 0;
  Poly num = parser.parse_until_slash(pos);
  if (pos >= text.size()) return RatFunc(num);
  if (text[pos] != '/') throw ParseError(std::string("unexpected '") + text[pos] + "'", pos);
  std::size_t slash = pos;
  ++pos;
  Poly den = parser.parse_until_slash(pos);
  if (pos < text.size()) throw ParseError(std::string("unexpected '") + text[pos] + "'", pos);
  if (den.is_zero()) throw ParseError("zero denominator", slash);
  return RatFunc(num, den);
}

}  // namespace ellk3
