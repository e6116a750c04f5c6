#pragma once

#include <ostream>
#include <string>
#include <utility>

#include "mahlercf/polynomial.hpp"
#include "mahlercf/rational.hpp"

namespace mahlercf {

/// Element of Q(t): a reduced fraction num(t)/den(t) of rational polynomials.
///
/// Invariants after every operation: gcd(num, den) = 1 and den is monic.
/// Zero is 0/1. Equality is therefore structural.
class RationalFunction {
 public:
  using Poly = Polynomial<Rational>;

  RationalFunction() : den_(Poly::constant(1)) {}
  RationalFunction(int c) : RationalFunction(Rational(c)) {}
  RationalFunction(long c) : RationalFunction(Rational(c)) {}
  RationalFunction(const Rational& c) : num_(Poly::constant(c)), den_(Poly::constant(1)) {}
  explicit RationalFunction(Poly num) : num_(std::move(num)), den_(Poly::constant(1)) {}
  RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  /// The indeterminate t.
  static RationalFunction variable() { return RationalFunction(Poly::x()); }

  const Poly& num() const noexcept { return num_; }
  const Poly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_constant() const noexcept { return num_.degree() <= 0 && den_.degree() == 0; }

  /// deg num - deg den; kMinusInfinity for zero.
  long degree() const noexcept { return is_zero() ? kMinusInfinity : num_.degree() - den_.degree(); }

  /// Value at a rational point; throws DivisionByZero at a pole.
  Rational evaluate(const Rational& at) const { return num_.evaluate(at) / den_.evaluate(at); }

  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return RationalFunction(a.num_ - b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a) {
    RationalFunction r = a;
    r.num_ = -r.num_;
    return r;
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return {};
    // Cross-cancel first to keep intermediate sizes small.
    const Poly g1 = gcd(a.num_, b.den_);
    const Poly g2 = gcd(b.num_, a.den_);
    RationalFunction r;
    r.num_ = exact_div(a.num_, g1) * exact_div(b.num_, g2);
    r.den_ = exact_div(a.den_, g2) * exact_div(b.den_, g1);
    r.fix_leading();
    return r;
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw DivisionByZero("rational function division by zero");
    return a * RationalFunction::raw(b.den_, b.num_);
  }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// "(num)/(den)" with integer coefficients in t, e.g. "(t^2-t)/1".
  std::string str() const;

  friend std::ostream& operator<<(std::ostream& os, const RationalFunction& r) { return os << r.str(); }

 private:
  // Already-coprime pair; only the leading coefficient needs fixing.
  static RationalFunction raw(Poly num, Poly den) {
    RationalFunction r;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    r.fix_leading();
    return r;
  }

  void fix_leading() {
    const Rational lead = den_.leading();
    if (lead != Rational(1)) {
      const Rational inv = Rational(1) / lead;
      num_ *= inv;
      den_ *= inv;
    }
  }

  void normalize() {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = Poly::constant(1);
      return;
    }
    const Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
    fix_leading();
  }

  Poly num_;
  Poly den_;
};

inline bool is_zero(const RationalFunction& r) noexcept { return r.is_zero(); }
inline std::string to_string(const RationalFunction& r) { return r.str(); }

namespace detail {

/// Scales a rational polynomial to a primitive integer polynomial with the
/// given scale factor: p = (1/scale) * result. Leading coefficient positive.
inline std::pair<Polynomial<Rational>, Rational> primitive_integer_part(const Polynomial<Rational>& p) {
  if (p.is_zero()) return {p, Rational(1)};
  mpz_class den_lcm = 1;
  for (const auto& c : p.coeffs()) den_lcm = lcm(den_lcm, c.den());
  mpz_class content = 0;
  for (const auto& c : p.coeffs()) content = gcd(content, mpz_class(c.num() * (den_lcm / c.den())));
  Rational scale = Rational(den_lcm, content);
  if (p.leading().sign() < 0) scale = -scale;
  return {p * scale, scale};
}

inline std::string integer_poly_string(const Polynomial<Rational>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t k = p.coeffs().size(); k-- > 0;) {
    const Rational& c = p.coeffs()[k];
    if (c.is_zero()) continue;
    const bool neg = c.sign() < 0;
    const Rational a = neg ? -c : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? "-" : "+";
    }
    if (k == 0 || a != Rational(1)) out += a.str();
    if (k > 0) out += (k == 0 || a != Rational(1)) ? "*t" : "t";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace detail

inline std::string RationalFunction::str() const {
  if (is_zero()) return "(0)/1";
  // Write num/den = (s_d / s_n) * N / D with N, D primitive integer polynomials.
  auto [n_int, s_n] = detail::primitive_integer_part(num_);
  auto [d_int, s_d] = detail::primitive_integer_part(den_);
  const Rational k = s_d / s_n;  // num/den = k * n_int/d_int
  Poly top = n_int * Rational(k.num());
  Poly bottom = d_int * Rational(k.den());
  const std::string bs = detail::integer_poly_string(bottom);
  return "(" + detail::integer_poly_string(top) + ")/" + (bottom.degree() == 0 ? bs : "(" + bs + ")");
}

}  // namespace mahlercf
