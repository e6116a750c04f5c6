#pragma once

#include <cstddef>
#include <limits>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mahlercf/errors.hpp"

namespace mahlercf {

/// Degree (or valuation) of the zero element.
inline constexpr long kMinusInfinity = std::numeric_limits<long>::min();

namespace detail {

// Member functions named is_zero/to_string hide ADL inside class scope, so
// coefficient-level calls go through these.
template <class T>
bool coeff_is_zero(const T& c) {
  return is_zero(c);
}

template <class T>
std::string coeff_string(const T& c) {
  return to_string(c);
}

// A coefficient string that can be juxtaposed with "*x" without parentheses.
inline bool is_simple_term(std::string_view s) { return s.find_first_of("+-( ") == std::string_view::npos; }

}  // namespace detail

/// Dense univariate polynomial over an exact field F.
///
/// Coefficients are stored by ascending degree and the last stored coefficient
/// is always nonzero, so the zero polynomial is the empty sequence and two
/// polynomials are equal iff their coefficient vectors are.
///
/// F must provide field arithmetic, construction from int, equality, and the
/// free functions `is_zero(const F&)` and `to_string(const F&)`.
template <class F>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial constant(const F& c) { return Polynomial(std::vector<F>{c}); }
  static Polynomial monomial(const F& c, std::size_t k) {
    std::vector<F> v(k + 1, F(0));
    v[k] = c;
    return Polynomial(std::move(v));
  }
  /// The indeterminate x.
  static Polynomial x() { return monomial(F(1), 1); }
  /// x + c.
  static Polynomial linear(const F& c) { return Polynomial(std::vector<F>{c, F(1)}); }

  bool is_zero() const noexcept { return c_.empty(); }
  long degree() const noexcept { return c_.empty() ? kMinusInfinity : static_cast<long>(c_.size()) - 1; }
  const std::vector<F>& coeffs() const noexcept { return c_; }

  /// Coefficient of x^k; zero beyond the stored range.
  F coeff(std::size_t k) const { return k < c_.size() ? c_[k] : F(0); }
  const F& leading() const {
    if (c_.empty()) throw InvalidArgument("leading coefficient of the zero polynomial");
    return c_.back();
  }
  bool is_monic() const { return !c_.empty() && c_.back() == F(1); }

  Polynomial monic() const {
    if (c_.empty()) return *this;
    return *this * (F(1) / c_.back());
  }

  /// Horner evaluation; T must accept multiplication and addition by F.
  template <class T>
  T evaluate(const T& at) const {
    T acc = T(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + T(*it);
    return acc;
  }

  /// p(x^k).
  Polynomial compose_power(std::size_t k) const {
    if (k == 0) return constant(evaluate(F(1)));
    if (c_.empty()) return *this;
    std::vector<F> v((c_.size() - 1) * k + 1, F(0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i * k] = c_[i];
    return Polynomial(std::move(v));
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const F& s) {
    if (detail::coeff_is_zero(s)) {
      c_.clear();
      return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& c : a.c_) c = -c;
    return a;
  }
  friend Polynomial operator*(Polynomial a, const F& s) { return a *= s; }
  friend Polynomial operator*(const F& s, Polynomial a) { return a *= s; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<F> v(a.c_.size() + b.c_.size() - 1, F(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (detail::coeff_is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(v));
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  std::string to_string(std::string_view var = "x") const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t k = c_.size(); k-- > 0;) {
      if (detail::coeff_is_zero(c_[k])) continue;
      std::string cs = detail::coeff_string(c_[k]);
      const bool neg = cs.size() > 1 && cs[0] == '-' && detail::is_simple_term(std::string_view(cs).substr(1));
      if (neg) cs.erase(0, 1);
      if (!out.empty()) out += neg ? " - " : " + ";
      else if (neg) out += "-";
      if (k == 0) {
        out += cs;
        continue;
      }
      if (cs != "1") out += (detail::is_simple_term(cs) ? cs : "(" + cs + ")") + "*";
      out += std::string(var);
      if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && detail::coeff_is_zero(c_.back())) c_.pop_back();
  }

  std::vector<F> c_;
};

template <class F>
bool is_zero(const Polynomial<F>& p) noexcept {
  return p.is_zero();
}

template <class F>
std::ostream& operator<<(std::ostream& os, const Polynomial<F>& p) {
  return os << p.to_string();
}

/// Euclidean division: returns (quotient, remainder) with deg r < deg b.
template <class F>
std::pair<Polynomial<F>, Polynomial<F>> divmod(const Polynomial<F>& a, const Polynomial<F>& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial<F>(), a};
  std::vector<F> rem = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  const F inv_lead = F(1) / bc.back();
  std::vector<F> quo(rem.size() - db, F(0));
  for (std::size_t k = rem.size(); k-- > db;) {
    if (is_zero(rem[k])) continue;
    const F q = rem[k] * inv_lead;
    quo[k - db] = q;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= q * bc[j];
  }
  rem.resize(db);
  return {Polynomial<F>(std::move(quo)), Polynomial<F>(std::move(rem))};
}

/// Monic greatest common divisor; gcd(0, 0) is 0.
template <class F>
Polynomial<F> gcd(Polynomial<F> a, Polynomial<F> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

/// Exact quotient a / b; throws if b does not divide a.
template <class F>
Polynomial<F> exact_div(const Polynomial<F>& a, const Polynomial<F>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw InvalidArgument("polynomial division is not exact");
  return q;
}

}  // namespace mahlercf
