#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mahlercf/errors.hpp"
#include "mahlercf/laurent_series.hpp"
#include "mahlercf/polynomial.hpp"

namespace mahlercf {

/// How an expansion ended.
enum class CfStatus {
  Complete,    ///< max_terms partial quotients produced
  Terminated,  ///< remainder was exactly zero: the input is rational
  Exhausted,   ///< the next partial quotient is not certified by the input precision
};

inline const char* to_string(CfStatus s) {
  switch (s) {
    case CfStatus::Complete: return "complete";
    case CfStatus::Terminated: return "terminated";
    case CfStatus::Exhausted: return "exhausted";
  }
  return "?";
}

/// Regular continued fraction [a_0; a_1, a_2, ...] of a Laurent series.
template <class F>
struct RawCF {
  std::vector<Polynomial<F>> a;  ///< a[0] may be zero; a[i] has degree >= 1 for i >= 1
  CfStatus status = CfStatus::Complete;
  /// Index of the first partial quotient that could not be certified.
  std::optional<std::size_t> exhausted_at;
  /// When the remainder vanished on its whole known range, the next partial
  /// quotient (if any) has at least this degree.
  std::optional<long> next_degree_at_least;
  /// Exact degree of the uncertified next partial quotient, when known.
  std::optional<long> next_degree;

  /// Number of partial quotients a_1..a_n.
  std::size_t terms() const { return a.empty() ? 0 : a.size() - 1; }
};

/// Modified continued fraction a_hat_0 + K(beta_n / a_hat_n) with monic
/// a_hat_n (n >= 1) and nonzero beta_n.
///
/// Index 0 of `beta` and `rho` holds the conventional beta_0 = 1, rho_0 = 1,
/// so beta[n] is beta_n for every stored n.
template <class F>
struct ModifiedCF {
  std::vector<Polynomial<F>> a_hat;
  std::vector<F> beta;
  std::vector<F> rho;  ///< leading coefficient of the raw denominator q_n
  CfStatus status = CfStatus::Complete;
  std::optional<std::size_t> exhausted_at;
  std::optional<long> next_degree_at_least;
  std::optional<long> next_degree;

  std::size_t terms() const { return a_hat.empty() ? 0 : a_hat.size() - 1; }

  /// alpha_n: constant term of a_hat_n = x + alpha_n (linear quotients).
  F alpha(std::size_t n) const { return a_hat.at(n).coeff(0); }
};

template <class F>
struct Convergent {
  Polynomial<F> p;
  Polynomial<F> q;
  std::size_t index = 0;
};

/// Certified coefficients a series needs for `terms` linear partial
/// quotients: 2 * terms + 2, plus a margin of 4.
inline long cf_precision_for(std::size_t terms) { return 2 * static_cast<long>(terms) + 6; }

/// Expands f into its continued fraction, certifying each partial quotient.
///
/// Each step inverts the remainder and splits off the polynomial part. The
/// expansion stops at `max_terms` partial quotients, at an exactly-zero
/// remainder (rational input), or when the input precision no longer
/// determines the next quotient; the last case is recorded, never guessed.
template <class F>
RawCF<F> cf_expand(const LaurentSeries<F>& f, std::size_t max_terms) {
  RawCF<F> out;
  auto [a0, r] = poly_split(f);
  out.a.push_back(std::move(a0));
  // Exact non-monomial remainders get this many terms on inversion.
  const long exact_terms = 2 * static_cast<long>(max_terms) + 8;
  while (out.terms() < max_terms) {
    if (r.is_exact_zero()) {
      out.status = CfStatus::Terminated;
      return out;
    }
    if (r.is_zero_on_known_range()) {
      out.status = CfStatus::Exhausted;
      out.exhausted_at = out.a.size();
      out.next_degree_at_least = r.precision() + 1;
      return out;
    }
    LaurentSeries<F> inv;
    bool certified = true;
    try {
      inv = series_invert(r, exact_terms);
      certified = inv.is_exact() || inv.precision() >= 0;
    } catch (const PrecisionExhausted&) {
      certified = false;
    }
    if (!certified) {
      // The valuation of r is known, so the degree of the next quotient is too.
      out.status = CfStatus::Exhausted;
      out.exhausted_at = out.a.size();
      out.next_degree = -r.top();
      out.next_degree_at_least = -r.top();
      return out;
    }
    auto [a, rest] = poly_split(inv);
    out.a.push_back(std::move(a));
    r = std::move(rest);
  }
  if (r.is_exact_zero()) out.status = CfStatus::Terminated;
  return out;
}

/// Continued fraction of the rational function p/q by the Euclidean
/// algorithm; always terminates exactly.
template <class F>
RawCF<F> cf_expand(const Polynomial<F>& p, const Polynomial<F>& q, std::size_t max_terms) {
  if (q.is_zero()) throw DivisionByZero("rational function with zero denominator");
  RawCF<F> out;
  auto [a0, rem] = divmod(p, q);
  out.a.push_back(std::move(a0));
  Polynomial<F> num = q;
  Polynomial<F> den = std::move(rem);
  while (!den.is_zero()) {
    if (out.terms() >= max_terms) return out;
    auto [a, r] = divmod(num, den);
    out.a.push_back(std::move(a));
    num = std::move(den);
    den = std::move(r);
  }
  out.status = CfStatus::Terminated;
  return out;
}

/// Monic normalisation of a raw continued fraction.
///
/// With rho_n the leading coefficient of the raw q_n (rho_0 = 1):
/// a_hat_n = a_n rho_(n-1) / rho_n and beta_(n+1) = rho_(n-1) / rho_(n+1),
/// where rho_(-1) is taken as 1 so that beta_1 = 1 / lc(a_1).
template <class F>
ModifiedCF<F> to_modified(const RawCF<F>& cf) {
  ModifiedCF<F> m;
  m.status = cf.status;
  m.exhausted_at = cf.exhausted_at;
  m.next_degree_at_least = cf.next_degree_at_least;
  m.next_degree = cf.next_degree;
  if (cf.a.empty()) return m;
  m.a_hat.push_back(cf.a[0]);
  m.beta.push_back(F(1));
  m.rho.push_back(F(1));
  F rho_prev2(1);  // rho_(n-2)
  for (std::size_t n = 1; n < cf.a.size(); ++n) {
    const F lead = cf.a[n].leading();
    const F rho_n = m.rho[n - 1] * lead;
    m.a_hat.push_back(cf.a[n] * (F(1) / lead));
    m.beta.push_back(rho_prev2 / rho_n);
    rho_prev2 = m.rho[n - 1];
    m.rho.push_back(rho_n);
  }
  return m;
}

/// Inverse of to_modified: a_n = a_hat_n rho_n / rho_(n-1) with
/// rho_n = rho_(n-2) / beta_n.
template <class F>
RawCF<F> reconstruct_raw(const ModifiedCF<F>& m) {
  RawCF<F> cf;
  cf.status = m.status;
  cf.exhausted_at = m.exhausted_at;
  cf.next_degree_at_least = m.next_degree_at_least;
  cf.next_degree = m.next_degree;
  if (m.a_hat.empty()) return cf;
  cf.a.push_back(m.a_hat[0]);
  F rho_prev2(1), rho_prev(1);
  for (std::size_t n = 1; n < m.a_hat.size(); ++n) {
    const F rho_n = rho_prev2 / m.beta[n];
    cf.a.push_back(m.a_hat[n] * (rho_n / rho_prev));
    rho_prev2 = rho_prev;
    rho_prev = rho_n;
  }
  return cf;
}

/// n-th convergent p_n/q_n by the monic recurrence
/// p_(k+1) = a_hat_(k+1) p_k + beta_(k+1) p_(k-1), same for q.
template <class F>
Convergent<F> convergent(const ModifiedCF<F>& cf, std::size_t n) {
  if (n >= cf.a_hat.size())
    throw IndexOutOfRange("convergent " + std::to_string(n) + " requested but only " +
                          std::to_string(cf.terms()) + " partial quotients are known");
  Polynomial<F> p_prev = Polynomial<F>::constant(F(1));
  Polynomial<F> p = cf.a_hat[0];
  Polynomial<F> q_prev;
  Polynomial<F> q = Polynomial<F>::constant(F(1));
  for (std::size_t k = 1; k <= n; ++k) {
    Polynomial<F> p_next = cf.a_hat[k] * p + p_prev * cf.beta[k];
    Polynomial<F> q_next = cf.a_hat[k] * q + q_prev * cf.beta[k];
    p_prev = std::move(p);
    p = std::move(p_next);
    q_prev = std::move(q);
    q = std::move(q_next);
  }
  return {std::move(p), std::move(q), n};
}

/// All convergents 0..n in one pass.
template <class F>
std::vector<Convergent<F>> convergents(const ModifiedCF<F>& cf, std::size_t n) {
  if (n >= cf.a_hat.size())
    throw IndexOutOfRange("convergents up to " + std::to_string(n) + " requested but only " +
                          std::to_string(cf.terms()) + " partial quotients are known");
  std::vector<Convergent<F>> out;
  out.reserve(n + 1);
  Polynomial<F> p_prev = Polynomial<F>::constant(F(1));
  Polynomial<F> q_prev;
  out.push_back({cf.a_hat[0], Polynomial<F>::constant(F(1)), 0});
  for (std::size_t k = 1; k <= n; ++k) {
    const auto& cur = out.back();
    Convergent<F> next{cf.a_hat[k] * cur.p + p_prev * cf.beta[k], cf.a_hat[k] * cur.q + q_prev * cf.beta[k], k};
    p_prev = cur.p;
    q_prev = cur.q;
    out.push_back(std::move(next));
  }
  return out;
}

enum class ContinuantKind { K0 = 0, K1 = 1 };

/// Generalised continuant over the slices (a_1..a_n), (beta_1..beta_n):
/// K_n = a_n K_(n-1) + beta_n K_(n-2) with K^0: (K_(-1), K_0) = (0, 1) and
/// K^1: (K_(-1), K_0) = (1, 0).
template <class F>
Polynomial<F> continuant(ContinuantKind kind, std::span<const Polynomial<F>> a, std::span<const F> beta) {
  if (a.size() != beta.size()) throw InvalidArgument("continuant slices differ in length");
  Polynomial<F> prev = kind == ContinuantKind::K0 ? Polynomial<F>() : Polynomial<F>::constant(F(1));
  Polynomial<F> cur = kind == ContinuantKind::K0 ? Polynomial<F>::constant(F(1)) : Polynomial<F>();
  for (std::size_t i = 0; i < a.size(); ++i) {
    Polynomial<F> next = a[i] * cur + prev * beta[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// Continuant over the stored block a_hat_(first..last), beta_(first..last).
template <class F>
Polynomial<F> continuant_block(ContinuantKind kind, const ModifiedCF<F>& cf, std::size_t first, std::size_t last) {
  if (last + 1 < first || last >= cf.a_hat.size())
    throw IndexOutOfRange("continuant block " + std::to_string(first) + ".." + std::to_string(last) +
                          " outside the " + std::to_string(cf.terms()) + " known terms");
  const std::size_t len = last + 1 - first;
  return continuant<F>(kind, std::span<const Polynomial<F>>(cf.a_hat).subspan(first, len),
                       std::span<const F>(cf.beta).subspan(first, len));
}

/// Rate used when f - p/q vanishes identically.
inline constexpr long kInfiniteRate = std::numeric_limits<long>::max();

/// Rate of approximation c of f by p/q: ||f - p/q|| = -2 deg q - c.
///
/// Throws NotApproximating when c <= 0 and PrecisionExhausted when the known
/// coefficients of q f - p all vanish and f is not exact.
template <class F>
long approx_rate(const LaurentSeries<F>& f, const Polynomial<F>& p, const Polynomial<F>& q) {
  if (q.is_zero()) throw DivisionByZero("approx_rate with q = 0");
  const long dq = q.degree();
  // ||f - p/q|| = ||q f - p|| - deg q.
  const LaurentSeries<F> diff = LaurentSeries<F>::from_polynomial(q) * f - LaurentSeries<F>::from_polynomial(p);
  if (diff.is_exact_zero()) return kInfiniteRate;
  if (diff.is_zero_on_known_range()) {
    const long c_min = -dq - diff.valuation_bound();
    if (c_min <= 0)
      throw PrecisionExhausted("known coefficients of q*f - p vanish but do not reach x^" + std::to_string(-dq));
    throw PrecisionExhausted("rate is at least " + std::to_string(c_min) + " but not certified");
  }
  const long c = -dq - diff.valuation();
  if (c <= 0)
    throw NotApproximating("||f - p/q|| = " + std::to_string(diff.valuation() - dq) + " >= -2 deg q = " +
                           std::to_string(-2 * dq));
  return c;
}

/// Legendre criterion: p/q is a convergent of f iff gcd(p, q) = 1 and
/// ||f - p/q|| < -2 deg q.
template <class F>
bool is_convergent(const LaurentSeries<F>& f, const Polynomial<F>& p, const Polynomial<F>& q) {
  if (gcd(p, q).degree() > 0) return false;
  try {
    return approx_rate(f, p, q) >= 1;
  } catch (const NotApproximating&) {
    return false;
  }
}

}  // namespace mahlercf
