#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mahlercf/contfrac.hpp"
#include "mahlercf/errors.hpp"
#include "mahlercf/hankel.hpp"
#include "mahlercf/mahler.hpp"
#include "mahlercf/rational.hpp"
#include "mahlercf/recurrence.hpp"

namespace mahlercf {

/// Lower bound 2 + (c - 1)/n0 from the first nonlinear partial quotient
/// a_(n0+1) of degree c, or the conditional value 2 when every quotient
/// through `horizon` is linear.
struct ExponentReport {
  std::optional<std::size_t> n0;
  std::optional<long> c;
  Rational lower_bound{2};
  bool conditional_two = false;
  std::size_t horizon = 0;
  bool rational_g = false;  ///< g is a rational function; no exponent statement applies
};

/// (n0, c) for the first partial quotient of degree >= 2 in a raw expansion.
template <class F>
std::pair<std::size_t, long> find_first_nonlinear(const RawCF<F>& cf) {
  for (std::size_t i = 1; i < cf.a.size(); ++i)
    if (cf.a[i].degree() >= 2) return {i - 1, cf.a[i].degree()};
  if (cf.next_degree && *cf.next_degree >= 2) return {cf.a.size() - 1, *cf.next_degree};
  throw NotFound("all " + std::to_string(cf.terms()) + " partial quotients are linear");
}

/// (n0, c) from a NonlinearAt(m) classification: n0 = m - 1 and c is the
/// degree of a_m, measured on the true expansion with growing precision.
/// Throws NotFound for badly-approximable verdicts and when g turns out
/// rational before index m.
inline std::pair<std::size_t, long> find_first_nonlinear(const Classification<Rational>& cls) {
  if (cls.badly_approximable())
    throw NotFound("no vanishing beta through " + std::to_string(cls.index) + " terms");
  const std::size_t m = cls.index;
  long prec = cf_precision_for(m);
  for (int attempt = 0; attempt < 6; ++attempt, prec *= 2) {
    const RawCF<Rational> cf = cf_expand(g_series(cls.params, prec), m);
    if (cf.terms() >= m) return {m - 1, cf.a[m].degree()};
    if (cf.status == CfStatus::Terminated) break;
    if (cf.terms() == m - 1 && cf.next_degree) return {m - 1, *cf.next_degree};
  }
  throw NotFound("partial quotient " + std::to_string(m) + " does not exist or is not certified");
}

namespace detail {

inline ExponentReport report_from(std::size_t n0, long c, std::size_t horizon) {
  ExponentReport r;
  r.n0 = n0;
  r.c = c;
  r.lower_bound = Rational(2) + Rational(c - 1) / Rational(static_cast<long>(n0));
  r.horizon = horizon;
  return r;
}

}  // namespace detail

/// Lower bound for the irrationality exponent of g(b), any integer |b| > 1.
/// d = 2, 3 use the closed-form recurrences; other d expand g directly.
inline ExponentReport lower_bound(const MahlerParams<Rational>& params, std::size_t terms) {
  params.validate();
  ExponentReport rep;
  rep.horizon = terms;
  try {
    if (params.d == 2 || params.d == 3) {
      const Classification<Rational> cls = classify(params, terms);
      if (cls.badly_approximable()) {
        rep.conditional_two = true;
        return rep;
      }
      auto [n0, c] = find_first_nonlinear(cls);
      return detail::report_from(n0, c, terms);
    }
    // Later quotients can be large and costly, so grow the expansion only
    // until the first nonlinear one shows up.
    for (std::size_t n = std::min<std::size_t>(8, terms);; n = std::min(2 * n, terms)) {
      const RawCF<Rational> cf = expand_g(params, n);
      try {
        auto [n0, c] = find_first_nonlinear(cf);
        return detail::report_from(n0, c, terms);
      } catch (const NotFound&) {
        if (cf.status != CfStatus::Complete) throw;
        if (n < terms) continue;
        rep.horizon = cf.terms();
        rep.conditional_two = true;
        return rep;
      }
    }
  } catch (const NotFound&) {
    if (!rational_closed_form(params)) throw;
    rep.rational_g = true;
    return rep;
  }
}

/// a_k / b_k from the n0-th convergent lifted k times, evaluated at b.
struct Approximant {
  mpz_class a;
  mpz_class b;                 ///< > 0
  unsigned k = 0;
  Rational reduced;            ///< a / b in lowest terms
  RationalInterval err;        ///< encloses |g(b) - a/b|
  double exponent_lo = 0;      ///< -log(err.hi) / log b_k
  double exponent_hi = 0;      ///< -log(err.lo) / log b_k; infinite when err.lo = 0
};

namespace detail {

inline mpz_class denominator_lcm(const Polynomial<Rational>& p) {
  mpz_class l = 1;
  for (const auto& c : p.coeffs()) l = lcm(l, c.den());
  return l;
}

inline mpz_class eval_integer(const Polynomial<Rational>& p, const mpz_class& at) {
  const Rational v = p.evaluate(Rational(at));
  if (!v.is_integer()) throw AssertionFailed("integer polynomial evaluated to " + v.str());
  return v.num();
}

}  // namespace detail

/// Rejects |b| <= 1 and arguments where g(b) = 0 (some factor P(b^(-d^t)) vanishes).
inline void require_nonzero_value(const MahlerParams<Rational>& params, const mpz_class& b) {
  params.validate();
  if (abs(b) <= 1) throw ArgumentTooSmall("|b| must be at least 2, got " + b.get_str());
  try {
    eval_g(params, b, Rational(1, 1 << 20));
  } catch (const ZeroFactor& e) {
    throw ZeroValue(std::string("g(b) = 0: ") + e.what());
  }
}

/// The approximants a_k / b_k, k = 0 .. k_max, with
///   a_k = P_int(b^(d^k)) prod_(t<k) P~(b^(d^t)),  b_k = D^k Q_int(b^(d^k)),
/// where L p_n0 = P_int, L q_n0 = Q_int are integral and D P* = P~ is.
/// Each carries a certified enclosure of |g(b) - a_k/b_k|.
inline std::vector<Approximant> approximants(const MahlerParams<Rational>& params, const mpz_class& b,
                                             std::size_t n0, unsigned k_max) {
  require_nonzero_value(params, b);
  const ModifiedCF<Rational> cf = to_modified(expand_g(params, n0));
  const Convergent<Rational> conv = convergent(cf, n0);
  const mpz_class L = lcm(detail::denominator_lcm(conv.p), detail::denominator_lcm(conv.q));
  const Polynomial<Rational> P_int = conv.p * Rational(L);
  const Polynomial<Rational> Q_int = conv.q * Rational(L);
  const Polynomial<Rational> ps = p_star(params);
  const mpz_class D = detail::denominator_lcm(ps);
  const Polynomial<Rational> P_tilde = ps * Rational(D);

  std::vector<Approximant> out;
  mpz_class x = b;        // b^(d^k)
  mpz_class prod = 1;     // prod_(t<k) P~(b^(d^t))
  mpz_class Dk = 1;
  for (unsigned k = 0; k <= k_max; ++k) {
    Approximant ap;
    ap.k = k;
    ap.a = detail::eval_integer(P_int, x) * prod;
    ap.b = Dk * detail::eval_integer(Q_int, x);
    if (ap.b == 0) throw ZeroValue("q(b^(d^k)) = 0 at k = " + std::to_string(k));
    if (ap.b < 0) {
      ap.a = -ap.a;
      ap.b = -ap.b;
    }
    ap.reduced = Rational(ap.a, ap.b);
    // Resolve the error to well below b_k^-2 so its size is measurable.
    Rational eps = Rational(1) / pow(Rational(ap.b), 4);
    for (int refine = 0; refine < 4; ++refine) {
      ap.err = (eval_g(params, b, eps) - ap.reduced).abs();
      if (!ap.err.contains_zero()) break;
      eps = eps * eps;
    }
    const double lb = log_abs(ap.b);
    ap.exponent_lo = ap.err.hi.is_zero() ? INFINITY : -log_abs(ap.err.hi) / lb;
    ap.exponent_hi = ap.err.lo.is_zero() ? INFINITY : -log_abs(ap.err.lo) / lb;
    out.push_back(std::move(ap));
    prod *= detail::eval_integer(P_tilde, x);
    x = mpz_class(pow(Rational(x), static_cast<unsigned long>(params.d)).num());
    Dk *= D;
  }
  return out;
}

/// Heuristic upper-bound formula (1 + rho)(min(rho^2, d)), with rho
/// estimated as the largest ratio s_(i+1)/s_i over the last `window` gaps of
/// the profile. Finite data only estimates the limsup.
struct BhwyReport {
  Rational rho_hat;
  Rational bound;
  std::size_t window = 0;
  static constexpr const char* label = "HEURISTIC";
};

template <class F>
BhwyReport bhwy_upper_bound(const HankelProfile<F>& profile, int d, std::size_t window) {
  const auto& s = profile.s;
  if (window == 0 || s.size() < window + 2)
    throw InsufficientData("need at least " + std::to_string(window + 2) + " nonvanishing degrees, have " +
                           std::to_string(s.size()));
  BhwyReport r;
  r.window = window;
  r.rho_hat = Rational(0);
  for (std::size_t i = s.size() - 1 - window; i + 1 < s.size(); ++i)
    r.rho_hat = std::max(r.rho_hat, Rational(s[i + 1]) / Rational(s[i]));
  r.bound = (Rational(1) + r.rho_hat) * std::min(r.rho_hat * r.rho_hat, Rational(d));
  return r;
}

}  // namespace mahlercf
