#ifndef KDEF_EXPR_PARSER_HPP
#define KDEF_EXPR_PARSER_HPP

#include <cctype>
#include <functional>
#include <string>

#include "kdef/errors.hpp"
#include "kdef/multipoly.hpp"

namespace kdef {

// Recursive-descent reader for the literal syntax shared by Scalars and
// SuperPolys: integers, identifiers, + - * / ^ and parentheses. Exponents
// must be nonnegative integer literals. V needs +, -, *, / and a
// constructor from Rational.
template <class V>
class ExprParser {
 public:
  using AtomFn = std::function<V(const std::string&)>;

  ExprParser(const std::string& text, AtomFn atom)
      : text_(text), atom_(std::move(atom)) {}

  V parse() {
    V v = sum();
    skip();
    if (pos_ != text_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError(why + " at position " + std::to_string(pos_) + " in \"" +
                     text_ + "\"");
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  V sum() {
    V v = product();
    while (true) {
      if (accept('+')) {
        v = v + product();
      } else if (accept('-')) {
        v = v - product();
      } else {
        return v;
      }
    }
  }

  V product() {
    V v = unary();
    while (true) {
      if (accept('*')) {
        v = v * unary();
      } else if (accept('/')) {
        v = v / unary();
      } else {
        return v;
      }
    }
  }

  V unary() {
    if (accept('-')) return V(Rational(0)) - unary();
    if (accept('+')) return unary();
    return power();
  }

  V power() {
    V base = primary();
    if (accept('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected integer exponent");
      unsigned long e = std::stoul(text_.substr(start, pos_ - start));
      V r(Rational(1));
      for (unsigned long i = 0; i < e; ++i) r = r * base;
      return r;
    }
    return base;
  }

  V primary() {
    skip();
    if (accept('(')) {
      V v = sum();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      Rational r(text_.substr(start, pos_ - start));
      return V(r);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      return atom_(text_.substr(start, pos_ - start));
    }
    fail("unexpected character");
  }

  std::string text_;
  AtomFn atom_;
  std::size_t pos_ = 0;
};

}  // namespace kdef

#endif  // KDEF_EXPR_PARSER_HPP
