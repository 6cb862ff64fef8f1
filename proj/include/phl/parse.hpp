#pragma once

// Polynomial text -> jet parser.
//
// Grammar (whitespace insensitive):
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := '-'* atom ('^' nonneg-integer)?
//   atom   := rational | identifier | '(' expr ')'
//   rational := integer ('/' integer)?
//
// Identifiers must be declared chart variables; over Q(i) the identifier `i`
// denotes the imaginary unit.  There is no implicit multiplication and no
// general division; '/' only appears inside rational literals.

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

#include "phl/field.hpp"
#include "phl/jet.hpp"

namespace phl {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, size_t pos)
      : std::runtime_error("parse error at position " + std::to_string(pos) +
                           ": " + msg) {}
};

namespace detail {

template <class F>
class PolyParser {
 public:
  PolyParser(const std::string& text, const std::vector<std::string>& vars,
             int order)
      : text_(text), vars_(vars), order_(order) {}

  Jet<F> run() {
    skip_ws();
    Jet<F> r = expr();
    skip_ws();
    if (pos_ != text_.size())
      throw ParseError("unexpected trailing input", pos_);
    return r;
  }

 private:
  Jet<F> expr() {
    Jet<F> r = term();
    for (;;) {
      skip_ws();
      if (peek() == '+') {
        ++pos_;
        r += term();
      } else if (peek() == '-') {
        ++pos_;
        r -= term();
      } else {
        return r;
      }
    }
  }

  Jet<F> term() {
    Jet<F> r = factor();
    for (;;) {
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        r = jet_mul(r, factor());
      } else {
        return r;
      }
    }
  }

  Jet<F> factor() {
    skip_ws();
    bool neg = false;
    while (peek() == '-') {
      neg = !neg;
      ++pos_;
      skip_ws();
    }
    Jet<F> a = atom();
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      size_t at = pos_;
      if (!std::isdigit(peek()))
        throw ParseError("exponent must be a nonnegative integer", at);
      long e = read_integer();
      Jet<F> p = Jet<F>::constant(nvars(), order_, F(1));
      for (long k = 0; k < e; ++k) p = jet_mul(p, a);
      a = p;
    }
    return neg ? -a : a;
  }

  Jet<F> atom() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      ++pos_;
      Jet<F> r = expr();
      skip_ws();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return r;
    }
    if (std::isdigit(c)) {
      long num = read_integer();
      long den = 1;
      if (peek() == '/') {
        ++pos_;
        size_t at = pos_;
        if (!std::isdigit(peek()))
          throw ParseError("expected denominator digits", at);
        den = read_integer();
        if (den == 0) throw ParseError("zero denominator", at);
      }
      return Jet<F>::constant(nvars(), order_, frac<F>(num, den));
    }
    if (std::isalpha(c) || c == '_') {
      size_t at = pos_;
      std::string id = read_identifier();
      for (size_t v = 0; v < vars_.size(); ++v)
        if (vars_[v] == id)
          return Jet<F>::variable(nvars(), order_, static_cast<int>(v));
      if (id == "i")
        return Jet<F>::constant(nvars(), order_, FieldInfo<F>::imaginary_unit());
      throw ParseError("unknown identifier '" + id + "'", at);
    }
    throw ParseError("expected a number, identifier or '('", pos_);
  }

  long read_integer() {
    size_t at = pos_;
    std::string digits;
    while (std::isdigit(peek())) digits += text_[pos_++];
    if (digits.empty()) throw ParseError("expected digits", at);
    if (digits.size() > 18) throw ParseError("integer literal too large", at);
    return std::stol(digits);
  }

  std::string read_identifier() {
    std::string id;
    while (std::isalnum(peek()) || peek() == '_') id += text_[pos_++];
    return id;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  int nvars() const { return static_cast<int>(vars_.size()); }

  const std::string& text_;
  const std::vector<std::string>& vars_;
  int order_;
  size_t pos_ = 0;
};

}  // namespace detail

template <class F>
Jet<F> jet_from_polynomial(const std::string& text,
                           const std::vector<std::string>& vars, int order) {
  if (vars.empty()) throw std::domain_error("jet_from_polynomial: no variables");
  detail::PolyParser<F> p(text, vars, order);
  return p.run();
}

}  // namespace phl
