#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mahlercf/contfrac.hpp"
#include "mahlercf/errors.hpp"
#include "mahlercf/laurent_series.hpp"
#include "mahlercf/polynomial.hpp"
#include "mahlercf/rational.hpp"

namespace mahlercf {

/// Parameters of g(x) = x^-1 prod_{t >= 0} P(x^(-d^t)) with
/// P(y) = 1 + u_1 y + ... + u_(d-1) y^(d-1).
template <class F>
struct MahlerParams {
  int d = 2;
  std::vector<F> u;  ///< u_1 .. u_(d-1)

  MahlerParams() = default;
  MahlerParams(int d_, std::vector<F> u_) : d(d_), u(std::move(u_)) { validate(); }

  void validate() const {
    if (d < 2) throw InvalidArgument("d must be at least 2, got " + std::to_string(d));
    if (u.size() != static_cast<std::size_t>(d - 1))
      throw InvalidArgument("d = " + std::to_string(d) + " needs " + std::to_string(d - 1) + " coefficients, got " +
                            std::to_string(u.size()));
  }

  /// P(y) itself.
  Polynomial<F> p() const {
    std::vector<F> c{F(1)};
    c.insert(c.end(), u.begin(), u.end());
    return Polynomial<F>(std::move(c));
  }

  bool all_zero() const {
    return std::all_of(u.begin(), u.end(), [](const F& c) { return detail::coeff_is_zero(c); });
  }

  std::string str() const {
    std::string s = "d=" + std::to_string(d) + " u=(";
    for (std::size_t i = 0; i < u.size(); ++i) s += (i ? "," : "") + detail::coeff_string(u[i]);
    return s + ")";
  }
};

/// Coefficients c_0 .. c_(n-1) of prod_t P(y^(d^t)).
template <class F>
std::vector<F> fhat_coeffs(const MahlerParams<F>& params, std::size_t n) {
  params.validate();
  std::vector<F> c(n, F(0));
  if (n == 0) return c;
  c[0] = F(1);
  for (std::size_t step = 1; step < n; step *= static_cast<std::size_t>(params.d)) {
    // Multiply in place by P(y^step); u_0 = 1 keeps the old value.
    for (std::size_t k = n; k-- > 0;) {
      for (std::size_t i = 1; i <= params.u.size(); ++i) {
        const std::size_t shift = i * step;
        if (shift > k) break;
        if (!detail::coeff_is_zero(params.u[i - 1])) c[k] += params.u[i - 1] * c[k - shift];
      }
    }
  }
  return c;
}

/// g(x) known down to x^(-N). All-zero parameters give the exact x^-1.
template <class F>
LaurentSeries<F> g_series(const MahlerParams<F>& params, long N) {
  if (N < 1) throw InvalidArgument("g_series needs N >= 1");
  if (params.all_zero()) {
    params.validate();
    return LaurentSeries<F>::monomial(F(1), -1);
  }
  return LaurentSeries<F>::truncated(-1, fhat_coeffs(params, static_cast<std::size_t>(N)), N);
}

/// P*(x) = x^(d-1) P(1/x).
template <class F>
Polynomial<F> p_star(const MahlerParams<F>& params) {
  params.validate();
  std::vector<F> c(params.u.rbegin(), params.u.rend());
  c.push_back(F(1));
  return Polynomial<F>(std::move(c));
}

struct FunctionalEqReport {
  bool holds = true;
  long depth = 0;                         ///< coefficients compared down to x^(-depth)
  std::optional<long> first_mismatch;     ///< exponent of the first differing coefficient
};

/// Compares g(x) with P*(x) g(x^d) coefficientwise down to x^(-N).
template <class F>
FunctionalEqReport check_functional_eq(const MahlerParams<F>& params, long N) {
  if (N < params.d) throw InvalidArgument("check_functional_eq needs N >= d");
  const LaurentSeries<F> g = g_series(params, N);
  const long m = (N + params.d - 1) / params.d;
  const LaurentSeries<F> rhs =
      LaurentSeries<F>::from_polynomial(p_star(params)) * g_series(params, m).substitute_power(params.d);
  FunctionalEqReport rep;
  rep.depth = N;
  for (long e = 0; e >= -N; --e) {
    if (!(g.coefficient(e) == rhs.coefficient(e))) {
      rep.holds = false;
      rep.first_mismatch = e;
      break;
    }
  }
  return rep;
}

/// (prod_{t<k} P*(x^(d^t)) p(x^(d^k)), q(x^(d^k))): a convergent p/q of g
/// lifted through the functional equation k times.
template <class F>
std::pair<Polynomial<F>, Polynomial<F>> lift_convergent(const MahlerParams<F>& params, const Polynomial<F>& p,
                                                        const Polynomial<F>& q, unsigned k) {
  const Polynomial<F> ps = p_star(params);
  Polynomial<F> factor = Polynomial<F>::constant(F(1));
  std::size_t step = 1;
  for (unsigned t = 0; t < k; ++t) {
    factor *= ps.compose_power(step);
    step *= static_cast<std::size_t>(params.d);
  }
  return {factor * p.compose_power(step), q.compose_power(step)};
}

/// Continued fraction of g with `terms` partial quotients. The precision
/// starts at cf_precision_for(terms) and doubles while the expansion is
/// exhausted early, up to `max_prec`.
template <class F>
RawCF<F> expand_g(const MahlerParams<F>& params, std::size_t terms, long max_prec = 0) {
  long prec = cf_precision_for(terms);
  if (max_prec <= 0) max_prec = 8 * prec;
  for (;;) {
    RawCF<F> cf = cf_expand(g_series(params, prec), terms);
    if (cf.status != CfStatus::Exhausted || prec >= max_prec) return cf;
    prec = std::min(2 * prec, max_prec);
  }
}

/// g as an exact quotient p/q when it is a rational function.
///
/// If g = p/q in lowest terms then q(x^d) divides q(x) P*(x), so deg q <= 1
/// and the expansion has at most one partial quotient. g is the only series
/// x^-1 + ... with P*(x) g(x^d) = g(x), so a convergent satisfying the
/// functional equation exactly is g itself.
template <class F>
std::optional<std::pair<Polynomial<F>, Polynomial<F>>> rational_closed_form(const MahlerParams<F>& params) {
  const RawCF<F> raw = cf_expand(g_series(params, 4 * cf_precision_for(2)), 2);
  if (raw.terms() != 1 || raw.status == CfStatus::Complete) return std::nullopt;
  const Convergent<F> c = convergent(to_modified(raw), 1);
  const auto [lp, lq] = lift_convergent(params, c.p, c.q, 1);
  if (!(lp * c.q == c.p * lq)) return std::nullopt;
  return std::pair{c.p, c.q};
}

/// Closed rational interval [lo, hi].
struct RationalInterval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  bool contains(const Rational& r) const { return lo <= r && r <= hi; }
  bool contains_zero() const { return contains(Rational(0)); }
  RationalInterval operator-(const Rational& r) const { return {lo - r, hi - r}; }
  /// {|y| : y in this interval}.
  RationalInterval abs() const {
    if (lo.sign() >= 0) return *this;
    if (hi.sign() <= 0) return {-hi, -lo};
    return {Rational(0), std::max(-lo, hi)};
  }
};

/// Certified enclosure of g(b) of width at most eps.
///
/// With U = sum |u_i| and S = 2U|b|^(-d^T) < 1, every factor with t >= T lies
/// in [1 - s_t, 1 + s_t] with sum s_t <= S, so the tail product lies in
/// [1 - S, 1/(1 - S)]. The first T factors are multiplied exactly.
inline RationalInterval eval_g(const MahlerParams<Rational>& params, const mpz_class& b, const Rational& eps) {
  params.validate();
  if (abs(b) <= 1) throw ArgumentTooSmall("|b| must be at least 2, got " + b.get_str());
  if (eps.sign() <= 0) throw InvalidArgument("eps must be positive");
  Rational U(0);
  for (const auto& c : params.u) U += abs(c);
  const Polynomial<Rational> P = params.p();
  const Rational inv_b = Rational(1) / Rational(b);
  Rational partial(1);
  Rational y = inv_b;  // b^(-d^t)
  for (unsigned t = 0;; ++t) {
    const Rational S = Rational(2) * U * abs(y);
    if (S < Rational(1)) {
      const Rational one_minus = Rational(1) - S;
      const Rational center = inv_b * partial;
      Rational lo = center * one_minus;
      Rational hi = center / one_minus;
      if (hi < lo) std::swap(lo, hi);
      if (hi - lo <= eps) return {lo, hi};
    }
    const Rational factor = P.evaluate(y);
    if (factor.is_zero()) throw ZeroFactor("P(b^(-d^t)) = 0 at t = " + std::to_string(t));
    partial *= factor;
    y = pow(y, static_cast<unsigned long>(params.d));
  }
}

}  // namespace mahlercf
