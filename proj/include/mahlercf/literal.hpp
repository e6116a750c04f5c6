#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "mahlercf/errors.hpp"
#include "mahlercf/rational.hpp"
#include "mahlercf/rational_function.hpp"

// Text literals shared by the CLI, config and JSON output:
//   rational:  "-7", "3/4"               (denominator > 0)
//   Q(t):      "(t^2-t)/1", "(1)/(t)", "t", "-2*t+1"

namespace mahlercf {

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  Polynomial<Rational> parse_all() {
    auto p = parse_sum();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return p;
  }

  Polynomial<Rational> parse_sum() {
    Polynomial<Rational> acc;
    skip_ws();
    bool first = true;
    while (pos_ < s_.size() && s_[pos_] != ')' ) {
      int sign = 1;
      skip_ws();
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      acc += parse_term() * Rational(sign);
      first = false;
      skip_ws();
    }
    if (first) fail("empty polynomial");
    return acc;
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("bad Q(t) literal '" + std::string(s_) + "': " + why);
  }
  std::size_t pos() const { return pos_; }

 private:
  Polynomial<Rational> parse_term() {
    skip_ws();
    mpz_class coeff = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      const std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      coeff = mpz_class(std::string(s_.substr(start, pos_ - start)));
      have_coeff = true;
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        skip_ws();
        if (peek() != 't') fail("expected 't' after '*'");
      }
    }
    if (peek() == 't') {
      ++pos_;
      std::size_t power = 1;
      skip_ws();
      if (peek() == '^') {
        ++pos_;
        skip_ws();
        const std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected exponent after '^'");
        power = std::stoul(std::string(s_.substr(start, pos_ - start)));
      }
      return Polynomial<Rational>::monomial(Rational(coeff), power);
    }
    if (!have_coeff) fail("expected a term");
    return Polynomial<Rational>::constant(Rational(coeff));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

inline Polynomial<Rational> parse_factor(PolyParser& p) {
  if (p.eat('(')) {
    auto inner = p.parse_sum();
    if (!p.eat(')')) p.fail("missing ')'");
    return inner;
  }
  return p.parse_sum();
}

}  // namespace detail

/// Parses "p" or "p/q" with decimal integers and q > 0.
inline Rational parse_rational(std::string_view text) {
  const std::string_view s = detail::trim(text);
  const auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view body = num;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  if (!detail::all_digits(body)) throw ParseError("bad rational literal '" + std::string(text) + "'");
  mpz_class n(std::string(num.front() == '+' ? num.substr(1) : num));
  if (slash == std::string_view::npos) return Rational(n);
  const std::string_view den = s.substr(slash + 1);
  if (!detail::all_digits(den)) throw ParseError("bad rational denominator in '" + std::string(text) + "'");
  mpz_class d(std::string{den});
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(n, d);
}

/// Parses a Q(t) literal "num(t)/den(t)" with integer coefficients.
inline RationalFunction parse_rational_function(std::string_view text) {
  const std::string_view s = detail::trim(text);
  if (s.empty()) throw ParseError("empty Q(t) literal");
  // Split on a top-level '/'.
  int depth = 0;
  std::size_t slash = std::string_view::npos;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (s[i] == '/' && depth == 0) {
      if (slash != std::string_view::npos) throw ParseError("more than one '/' in '" + std::string(text) + "'");
      slash = i;
    }
  }
  auto parse_side = [&](std::string_view side) {
    detail::PolyParser p(side);
    auto poly = detail::parse_factor(p);
    p.skip_ws();
    if (p.pos() != side.size()) p.fail("unexpected trailing input");
    return poly;
  };
  auto num = parse_side(s.substr(0, slash));
  if (slash == std::string_view::npos) return RationalFunction(num);
  auto den = parse_side(s.substr(slash + 1));
  if (den.is_zero()) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return RationalFunction(num, den);
}

}  // namespace mahlercf
