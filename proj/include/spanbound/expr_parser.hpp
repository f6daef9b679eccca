#pragma once

// Recursive-descent reader for the element text grammar shared by all backends:
//
//   expr    := term (('+' | '-') term)*
//   term    := factor (('*' | '/') factor)*
//   factor  := '-' factor | atom ('^' integer)?
//   atom    := integer | identifier | 'e[' group-element ']' | '(' expr ')'
//
// The builder decides what identifiers and basis symbols mean.

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "spanbound/error.hpp"

namespace spanbound {

template <class Builder>
class ExprParser {
 public:
  using value = typename Builder::value;

  ExprParser(const Builder& b, std::string_view text) : b_(b), text_(text) {}

  value parse() {
    skip();
    if (pos_ >= text_.size()) error("empty expression");
    value v = expr();
    skip();
    if (pos_ != text_.size()) error("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorKind::SyntaxError, what + " at column " + std::to_string(pos_ + 1) + " in '" + std::string(text_) + "'");
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  value expr() {
    value acc = term();
    for (;;) {
      if (accept('+'))
        acc = b_.add(acc, term());
      else if (accept('-'))
        acc = b_.sub(acc, term());
      else
        return acc;
    }
  }

  value term() {
    value acc = factor();
    for (;;) {
      if (accept('*')) {
        acc = b_.mul(acc, factor());
      } else if (accept('/')) {
        std::size_t at = pos_;
        value d = factor();
        try {
          acc = b_.div(acc, d);
        } catch (const Error& e) {
          if (e.kind() == ErrorKind::ZeroInverse)
            fail(ErrorKind::ZeroDenominator, "division by zero at column " + std::to_string(at + 1) + " in '" + std::string(text_) + "'");
          throw;
        }
      } else {
        return acc;
      }
    }
  }

  value factor() {
    if (accept('-')) return b_.neg(factor());
    value base = atom();
    if (accept('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) error("expected exponent");
      if (pos_ - start > 6) error("exponent too large");
      base = b_.pow(base, static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
    }
    return base;
  }

  value atom() {
    skip();
    if (pos_ >= text_.size()) error("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      value v = expr();
      if (!accept(')')) error("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return b_.number(mpz_class(std::string(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      if (name == "e" && pos_ < text_.size() && text_[pos_] == '[') {
        std::size_t close = text_.find(']', pos_);
        if (close == std::string_view::npos) error("unterminated 'e[' basis symbol");
        std::string_view inside = text_.substr(pos_ + 1, close - pos_ - 1);
        pos_ = close + 1;
        return b_.basis(inside);
      }
      auto v = b_.variable(name);
      if (!v) {
        pos_ = start;
        error("unknown symbol '" + std::string(name) + "'");
      }
      return *v;
    }
    error("unexpected character '" + std::string(1, c) + "'");
  }

  const Builder& b_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

template <class Builder>
typename Builder::value parse_expression(const Builder& b, std::string_view text) {
  return ExprParser<Builder>(b, text).parse();
}

}  // namespace spanbound
