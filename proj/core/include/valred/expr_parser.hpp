#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "valred/errors.hpp"

namespace valred {

/// Recursive-descent parser for infix expressions over {digits, names,
/// + - * / ^ ( )}. The value type T needs +, binary and unary -, and *;
/// the policy resolves leaves and division:
///
///   T number(const std::string& digits, std::size_t pos) const;
///   T identifier(const std::string& name, std::size_t pos) const;
///   T divide(const T& a, const T& b, std::size_t pos) const;
///
/// `^` takes a positive integer literal. Names may contain letters, digits,
/// '_' and a trailing prime.
template <class T, class Policy>
class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, const Policy& policy) : text_(text), policy_(policy) {}

  T parse() {
    T value = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  T expression() {
    accept('+');
    T value = term();
    for (;;) {
      if (accept('+')) {
        value = value + term();
      } else if (accept('-')) {
        value = value - term();
      } else {
        return value;
      }
    }
  }

  T term() {
    T value = unary();
    for (;;) {
      skip_space();
      const std::size_t at = pos_;
      if (accept('*')) {
        value = value * unary();
      } else if (accept('/')) {
        value = policy_.divide(value, unary(), at);
      } else {
        return value;
      }
    }
  }

  T unary() {
    if (accept('-')) return -unary();
    return power();
  }

  T power() {
    T base = atom();
    if (!accept('^')) return base;
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a positive integer exponent");
    const unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
    if (e == 0) {
      pos_ = start;
      fail("exponent must be positive");
    }
    T value = base;
    for (unsigned long i = 1; i < e; ++i) value = value * base;
    return value;
  }

  T atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    const std::size_t start = pos_;
    if (c == '(') {
      ++pos_;
      T value = expression();
      if (!accept(')')) fail("expected ')'");
      return value;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return policy_.number(std::string(text_.substr(start, pos_ - start)), start);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      while (pos_ < text_.size() && text_[pos_] == '\'') ++pos_;
      return policy_.identifier(std::string(text_.substr(start, pos_ - start)), start);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const Policy& policy_;
  std::size_t pos_ = 0;
};

template <class T, class Policy>
T parse_expression(std::string_view text, const Policy& policy) {
  return ExpressionParser<T, Policy>(text, policy).parse();
}

}  // namespace valred
