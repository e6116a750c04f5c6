#pragma once

#include <gmpxx.h>

#include <cmath>
#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "mahlercf/errors.hpp"

namespace mahlercf {

/// Arbitrary-precision rational number, always stored in lowest terms with a
/// positive denominator.
///
/// A thin value wrapper over GMP's mpq_class. The wrapper exists so generic
/// code sees plain value semantics (no expression templates) and the same
/// free-function vocabulary (`is_zero`, `to_string`) as RationalFunction.
class Rational {
 public:
  Rational() = default;
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(n) {}
  Rational(long long n) : v_(static_cast<long>(n)) {}
  Rational(const mpz_class& n) : v_(n) {}
  Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  const mpq_class& get() const noexcept { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  int sign() const noexcept { return sgn(v_); }
  bool is_zero() const noexcept { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  Rational& operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero("rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  std::string str() const { return v_.get_str(); }
  double to_double() const { return v_.get_d(); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class v_;
};

inline bool is_zero(const Rational& r) noexcept { return r.is_zero(); }
inline std::string to_string(const Rational& r) { return r.str(); }

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

/// r^e for a nonnegative integer exponent.
inline Rational pow(const Rational& r, unsigned long e) {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), r.num().get_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), r.den().get_mpz_t(), e);
  return Rational(n, d);
}

/// r^e for any integer exponent; r must be nonzero when e < 0.
inline Rational ipow(const Rational& r, long e) {
  if (e >= 0) return pow(r, static_cast<unsigned long>(e));
  if (r.is_zero()) throw DivisionByZero("zero to a negative power");
  return pow(Rational(1) / r, static_cast<unsigned long>(-e));
}

/// Natural log of |z| for a nonzero big integer, without overflow.
inline double log_abs(const mpz_class& z) {
  long exp2 = 0;
  const double mant = mpz_get_d_2exp(&exp2, z.get_mpz_t());
  return std::log(std::fabs(mant)) + static_cast<double>(exp2) * std::log(2.0);
}

/// Natural log of |r| for a nonzero rational.
inline double log_abs(const Rational& r) {
  if (r.is_zero()) throw DivisionByZero("log of zero");
  return log_abs(r.num()) - log_abs(r.den());
}

inline mpz_class floor(const Rational& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
  return q;
}

inline mpz_class ceil(const Rational& r) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
  return q;
}

inline mpz_class lcm(const mpz_class& a, const mpz_class& b) {
  mpz_class out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

inline mpz_class gcd(const mpz_class& a, const mpz_class& b) {
  mpz_class out;
  mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

/// Decimal rendering with `digits` fractional digits, rounded toward -inf
/// (`round_up == false`) or +inf. Used for outward-rounded interval output.
inline std::string to_decimal(const Rational& r, unsigned digits, bool round_up) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  const Rational scaled = r * Rational(scale);
  const mpz_class q = round_up ? ceil(scaled) : floor(scaled);
  const bool neg = q < 0;
  std::string s = mpz_class(neg ? mpz_class(-q) : q).get_str();
  if (digits > 0) {
    if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
  }
  return neg ? "-" + s : s;
}

/// r as "m.mmme-N" with `digits` fractional digits in the mantissa,
/// rounded toward +infinity if round_up and toward -infinity otherwise.
inline std::string to_scientific(const Rational& r, unsigned digits, bool round_up) {
  if (r.is_zero()) return "0";
  const Rational a = abs(r);
  long e = static_cast<long>(std::floor(log_abs(a) / std::log(10.0)));
  while (a < ipow(Rational(10), e)) --e;
  while (a >= ipow(Rational(10), e + 1)) ++e;
  const Rational mantissa = r / ipow(Rational(10), e);
  return to_decimal(mantissa, digits, round_up) + "e" + std::to_string(e);
}

}  // namespace mahlercf
