#pragma once

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "mahlercf/errors.hpp"
#include "mahlercf/polynomial.hpp"

namespace mahlercf {

/// Truncated Laurent series in descending powers of x with rigorous
/// precision bookkeeping.
///
/// A series is either *exact* (finitely many nonzero terms, everything else
/// known to be zero) or carries a precision N: every coefficient of x^e with
/// e >= -N is exactly known and nothing below is claimed.
///
/// Storage: coeffs()[i] is the coefficient of x^(top() - i). The first stored
/// coefficient is nonzero. A non-exact series whose known coefficients are all
/// zero stores nothing ("zero on its known range"); its valuation is then
/// indeterminate, bounded above by -N - 1.
template <class F>
class LaurentSeries {
 public:
  /// The exact zero series.
  LaurentSeries() = default;

  /// Non-exact series: coefficients of x^top, x^(top-1), ... known down to
  /// x^(-prec). Missing trailing coefficients are taken as known zeros; any
  /// supplied coefficient below x^(-prec) is dropped.
  static LaurentSeries truncated(long top, std::vector<F> coeffs, long prec) {
    LaurentSeries s;
    s.exact_ = false;
    s.prec_ = prec;
    const long keep = top + prec + 1;
    if (keep <= 0) {
      coeffs.clear();
    } else {
      coeffs.resize(static_cast<std::size_t>(keep), F(0));
    }
    s.top_ = top;
    s.c_ = std::move(coeffs);
    s.normalize();
    return s;
  }

  /// Exact series with finitely many terms starting at x^top.
  static LaurentSeries exact(long top, std::vector<F> coeffs) {
    LaurentSeries s;
    s.top_ = top;
    s.c_ = std::move(coeffs);
    s.normalize();
    return s;
  }

  static LaurentSeries monomial(const F& c, long e) { return exact(e, {c}); }

  static LaurentSeries from_polynomial(const Polynomial<F>& p) {
    if (p.is_zero()) return {};
    std::vector<F> v(p.coeffs().rbegin(), p.coeffs().rend());
    return exact(p.degree(), std::move(v));
  }

  bool is_exact() const noexcept { return exact_; }
  /// Precision N (meaningful only for non-exact series).
  long precision() const noexcept { return prec_; }
  /// True when no coefficient is stored: exact zero, or zero on the known range.
  bool is_zero_on_known_range() const noexcept { return c_.empty(); }
  bool is_exact_zero() const noexcept { return exact_ && c_.empty(); }
  long top() const noexcept { return top_; }
  const std::vector<F>& coeffs() const noexcept { return c_; }

  /// Lowest exponent whose coefficient is known (non-exact series only).
  long lowest_known() const noexcept { return -prec_; }

  /// Valuation ||f||: largest exponent with nonzero coefficient,
  /// kMinusInfinity for the exact zero series.
  long valuation() const {
    if (!c_.empty()) return top_;
    if (exact_) return kMinusInfinity;
    throw IndeterminateValuation("all known coefficients vanish down to x^" + std::to_string(-prec_));
  }

  /// Upper bound on the valuation that is always available.
  long valuation_bound() const noexcept {
    if (!c_.empty()) return top_;
    if (exact_) return kMinusInfinity;
    return -prec_ - 1;
  }

  const F& leading() const {
    if (c_.empty()) throw ZeroLeadingCoefficient("series has no nonzero known coefficient");
    return c_.front();
  }

  /// Coefficient of x^e. Throws PrecisionExhausted outside the known range.
  F coefficient(long e) const {
    if (!exact_ && e < -prec_)
      throw PrecisionExhausted("coefficient of x^" + std::to_string(e) + " is below the known range x^" +
                               std::to_string(-prec_));
    if (c_.empty() || e > top_) return F(0);
    const long idx = top_ - e;
    return idx < static_cast<long>(c_.size()) ? c_[static_cast<std::size_t>(idx)] : F(0);
  }

  /// Keeps only coefficients down to x^(-new_prec); never increases precision.
  LaurentSeries truncate(long new_prec) const {
    if (!exact_ && new_prec >= prec_) return *this;
    std::vector<F> v = c_;
    return truncated(top_, std::move(v), new_prec);
  }

  /// f(x^k) for k >= 1.
  LaurentSeries substitute_power(long k) const {
    if (k < 1) throw InvalidArgument("substitute_power needs k >= 1");
    if (c_.empty()) {
      LaurentSeries z = *this;
      if (!exact_) z.prec_ = k * (prec_ + 1) - 1;
      return z;
    }
    std::vector<F> v((c_.size() - 1) * static_cast<std::size_t>(k) + 1, F(0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i * static_cast<std::size_t>(k)] = c_[i];
    if (exact_) return exact(top_ * k, std::move(v));
    // The first unknown coefficient of f sits at x^(-prec-1); it moves to x^(-k(prec+1)).
    return truncated(top_ * k, std::move(v), k * (prec_ + 1) - 1);
  }

  /// Structural equality: same exactness, precision and known coefficients.
  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
    if (a.exact_ != b.exact_ || (!a.exact_ && a.prec_ != b.prec_)) return false;
    if (a.c_.empty() || b.c_.empty()) return a.c_.empty() && b.c_.empty();
    return a.top_ == b.top_ && a.c_ == b.c_;
  }

  friend LaurentSeries operator-(const LaurentSeries& a) {
    LaurentSeries r = a;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) { return combine(a, b, false); }
  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return combine(a, b, true); }

  friend LaurentSeries operator*(const LaurentSeries& a, const F& s) {
    if (detail::coeff_is_zero(s)) {
      LaurentSeries z = a;
      z.c_.clear();
      return z;
    }
    LaurentSeries r = a;
    for (auto& c : r.c_) c *= s;
    return r;
  }

  /// Product with prec_out = min(prec_a - val(b), prec_b - val(a)).
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    if (a.is_exact_zero() || b.is_exact_zero()) return {};
    const bool exact = a.exact_ && b.exact_;
    long prec = 0;
    if (!exact) {
      prec = std::numeric_limits<long>::max();
      if (!a.exact_) prec = std::min(prec, a.prec_ - b.valuation_bound());
      if (!b.exact_) prec = std::min(prec, b.prec_ - a.valuation_bound());
    }
    if (a.c_.empty() || b.c_.empty()) {
      LaurentSeries z;
      z.exact_ = false;
      z.prec_ = prec;
      return z;
    }
    const long top = a.top_ + b.top_;
    std::size_t len = a.c_.size() + b.c_.size() - 1;
    if (!exact) {
      const long keep = top + prec + 1;
      if (keep <= 0) {
        LaurentSeries z;
        z.exact_ = false;
        z.prec_ = prec;
        return z;
      }
      len = std::min(len, static_cast<std::size_t>(keep));
    }
    std::vector<F> v(len, F(0));
    for (std::size_t i = 0; i < a.c_.size() && i < len; ++i) {
      if (detail::coeff_is_zero(a.c_[i])) continue;
      const std::size_t jmax = std::min(b.c_.size(), len - i);
      for (std::size_t j = 0; j < jmax; ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return exact ? LaurentSeries::exact(top, std::move(v)) : truncated(top, std::move(v), prec);
  }

 private:
  static LaurentSeries combine(const LaurentSeries& a, const LaurentSeries& b, bool subtract) {
    const bool exact = a.exact_ && b.exact_;
    long prec = 0;
    if (!exact) prec = std::min(a.exact_ ? std::numeric_limits<long>::max() : a.prec_,
                                b.exact_ ? std::numeric_limits<long>::max() : b.prec_);
    if (a.c_.empty() && b.c_.empty()) {
      LaurentSeries z;
      z.exact_ = exact;
      z.prec_ = prec;
      return z;
    }
    long hi = std::numeric_limits<long>::min();
    long lo = std::numeric_limits<long>::max();
    for (const LaurentSeries* s : {&a, &b}) {
      if (s->c_.empty()) continue;
      hi = std::max(hi, s->top_);
      lo = std::min(lo, s->top_ - static_cast<long>(s->c_.size()) + 1);
    }
    if (!exact) {
      lo = -prec;
      if (hi < lo) {
        LaurentSeries z;
        z.exact_ = false;
        z.prec_ = prec;
        return z;
      }
    }
    std::vector<F> v(static_cast<std::size_t>(hi - lo + 1), F(0));
    auto add = [&](const LaurentSeries& s, bool neg) {
      for (std::size_t i = 0; i < s.c_.size(); ++i) {
        const long e = s.top_ - static_cast<long>(i);
        if (e < lo) break;
        auto& slot = v[static_cast<std::size_t>(hi - e)];
        if (neg) slot -= s.c_[i];
        else slot += s.c_[i];
      }
    };
    add(a, false);
    add(b, subtract);
    return exact ? LaurentSeries::exact(hi, std::move(v)) : truncated(hi, std::move(v), prec);
  }

  void normalize() {
    std::size_t first = 0;
    while (first < c_.size() && detail::coeff_is_zero(c_[first])) ++first;
    if (first == c_.size()) {
      c_.clear();
      top_ = 0;
      return;
    }
    if (first > 0) {
      c_.erase(c_.begin(), c_.begin() + static_cast<long>(first));
      top_ -= static_cast<long>(first);
    }
    if (exact_)
      while (detail::coeff_is_zero(c_.back())) c_.pop_back();
  }

  long top_ = 0;
  std::vector<F> c_;
  long prec_ = 0;
  bool exact_ = true;
};

/// Multiplicative inverse 1/f.
///
/// For a non-exact f with valuation m the result has top -m and precision
/// prec_f - 2|m|; fewer known terms than that cannot be guaranteed by this
/// uniform rule. An exact monomial inverts exactly. Any other exact input
/// yields `terms_if_exact` known coefficients.
template <class F>
LaurentSeries<F> series_invert(const LaurentSeries<F>& f, long terms_if_exact = 64) {
  if (f.is_exact_zero()) throw ZeroLeadingCoefficient("inverting the zero series");
  if (f.is_zero_on_known_range())
    throw IndeterminateValuation("cannot invert a series that vanishes on its known range");
  const long m = f.top();
  const F inv_lead = F(1) / f.leading();
  if (f.is_exact() && f.coeffs().size() == 1) return LaurentSeries<F>::monomial(inv_lead, -m);
  const long prec_out = f.is_exact() ? m + terms_if_exact - 1 : f.precision() - 2 * std::labs(m);
  if (prec_out < m)
    throw PrecisionExhausted("inverse of a series with valuation " + std::to_string(m) + " and precision " +
                             std::to_string(f.precision()) + " has no certified coefficient");
  const std::size_t count = static_cast<std::size_t>(prec_out - m + 1);
  const auto& fc = f.coeffs();
  std::vector<F> out(count, F(0));
  out[0] = inv_lead;
  for (std::size_t k = 1; k < count; ++k) {
    F acc(0);
    const std::size_t jmax = std::min(k, fc.size() - 1);
    for (std::size_t j = 1; j <= jmax; ++j) {
      if (detail::coeff_is_zero(fc[j])) continue;
      acc += fc[j] * out[k - j];
    }
    out[k] = -(acc * inv_lead);
  }
  return LaurentSeries<F>::truncated(-m, std::move(out), prec_out);
}

/// Splits f into its polynomial part (exponents >= 0) and the remainder
/// (exponents <= -1). Requires the constant term to be known.
template <class F>
std::pair<Polynomial<F>, LaurentSeries<F>> poly_split(const LaurentSeries<F>& f) {
  if (!f.is_exact() && f.precision() < 0)
    throw PrecisionExhausted("polynomial part of a series known only down to x^" + std::to_string(-f.precision()));
  if (f.is_zero_on_known_range() || f.top() < 0) return {Polynomial<F>(), f};
  const long top = f.top();
  std::vector<F> poly(static_cast<std::size_t>(top + 1), F(0));
  std::vector<F> rest;
  const auto& c = f.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    const long e = top - static_cast<long>(i);
    if (e >= 0) poly[static_cast<std::size_t>(e)] = c[i];
    else rest.push_back(c[i]);
  }
  LaurentSeries<F> r = f.is_exact() ? LaurentSeries<F>::exact(-1, std::move(rest))
                                    : LaurentSeries<F>::truncated(-1, std::move(rest), f.precision());
  return {Polynomial<F>(std::move(poly)), std::move(r)};
}

/// True when f and g agree on every exponent >= -depth known to both.
template <class F>
bool agree_down_to(const LaurentSeries<F>& f, const LaurentSeries<F>& g, long depth) {
  long hi = std::max(f.valuation_bound(), g.valuation_bound());
  if (hi == kMinusInfinity) return true;
  for (long e = hi; e >= -depth; --e)
    if (!(f.coefficient(e) == g.coefficient(e))) return false;
  return true;
}

}  // namespace mahlercf
