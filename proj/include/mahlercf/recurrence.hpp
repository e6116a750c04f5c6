#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mahlercf/contfrac.hpp"
#include "mahlercf/errors.hpp"
#include "mahlercf/mahler.hpp"
#include "mahlercf/polynomial.hpp"

namespace mahlercf {

/// alpha_n, beta_n of the all-linear expansion g = K(beta_n / (x + alpha_n)).
///
/// Both vectors are 1-based: index 0 holds an unused zero. If `stop` is set,
/// beta_stop = 0 is the last stored beta and alpha is stored only as far as
/// it is computable without dividing by beta_stop.
template <class F>
struct CoeffSeq {
  std::vector<F> alpha{F(0)};
  std::vector<F> beta{F(0)};
  std::optional<std::size_t> stop;

  std::size_t alpha_count() const { return alpha.size() - 1; }
  std::size_t beta_count() const { return beta.size() - 1; }
  bool has_alpha(std::size_t n) const { return n >= 1 && n < alpha.size(); }
  bool has_beta(std::size_t n) const { return n >= 1 && n < beta.size(); }

  const F& a(std::size_t n) const {
    if (!has_alpha(n)) throw IndexOutOfRange("alpha_" + std::to_string(n) + " not computed");
    return alpha[n];
  }
  const F& b(std::size_t n) const {
    if (!has_beta(n)) throw IndexOutOfRange("beta_" + std::to_string(n) + " not computed");
    return beta[n];
  }
};

namespace detail {

// Appends beta_n; returns false (and sets stop) when it vanishes.
template <class F>
bool push_beta(CoeffSeq<F>& s, F value) {
  const bool zero = coeff_is_zero(value);
  s.beta.push_back(std::move(value));
  if (zero) s.stop = s.beta.size() - 1;
  return !zero;
}

}  // namespace detail

/// d = 2: alpha_(2k+1) = -u, alpha_(2k+2) = u, beta_1 = 1, beta_2 = u^2 - u,
/// beta_(2k+3) = -beta_(k+2) / beta_(2k+2),
/// beta_(2k+4) = alpha_(k+2) + u^2 - beta_(2k+3).
/// Computes indices 1..n and halts at the first vanishing beta.
template <class F>
CoeffSeq<F> recur_d2(const F& u, std::size_t n) {
  if (n < 1) throw InvalidArgument("recur_d2 needs n >= 1");
  CoeffSeq<F> s;
  const F u2 = u * u;
  for (std::size_t m = 1; m <= n; ++m) {
    s.alpha.push_back(m % 2 == 1 ? -u : u);
    F beta;
    if (m == 1) beta = F(1);
    else if (m == 2) beta = u2 - u;
    else if (m % 2 == 1) beta = -(s.beta[(m - 3) / 2 + 2] / s.beta[m - 1]);
    else beta = s.alpha[(m - 4) / 2 + 2] + u2 - s.beta[m - 1];
    if (!detail::push_beta(s, std::move(beta))) break;
  }
  return s;
}

/// d = 3 with P(y) = 1 + u y + v y^2.
///
/// Seeds: alpha_1 = -u, beta_1 = 1, beta_2 = u^2 - v,
/// alpha_2 = u(2v - 1 - u^2)/(v - u^2), alpha_3 = -u(v - 1)/(v - u^2),
/// beta_3 = (u^2 + u^4 + v^3 - 3u^2 v)/(v - u^2)^2. Then for k >= 0:
///   alpha_(3k+4) = -u
///   beta_(3k+4)  = beta_(k+2) / (beta_(3k+3) beta_(3k+2))
///   beta_(3k+5)  = u^2 - v - beta_(3k+4)
///   alpha_(3k+5) = u - (alpha_(k+2) + uv - alpha_(3k+2) beta_(3k+4)) / beta_(3k+5)
///   alpha_(3k+6) = u - alpha_(3k+5)
///   beta_(3k+6)  = v - alpha_(3k+5) alpha_(3k+6)
/// beta_2 is tested before anything divides by v - u^2.
template <class F>
CoeffSeq<F> recur_d3(const F& u, const F& v, std::size_t n) {
  if (n < 1) throw InvalidArgument("recur_d3 needs n >= 1");
  CoeffSeq<F> s;
  const F u2 = u * u;
  s.alpha.push_back(-u);
  detail::push_beta(s, F(1));
  if (n == 1) return s;
  if (!detail::push_beta(s, u2 - v)) return s;
  const F w = v - u2;
  s.alpha.push_back(u * (F(2) * v - F(1) - u2) / w);
  if (n == 2) return s;
  s.alpha.push_back(-(u * (v - F(1)) / w));
  if (!detail::push_beta(s, (u2 + u2 * u2 + v * v * v - F(3) * u2 * v) / (w * w))) return s;
  for (std::size_t k = 0;; ++k) {
    const std::size_t i4 = 3 * k + 4;
    if (i4 > n) break;
    s.alpha.push_back(-u);
    if (!detail::push_beta(s, s.beta[k + 2] / (s.beta[3 * k + 3] * s.beta[3 * k + 2]))) break;
    if (i4 + 1 > n) break;
    const F b5 = u2 - v - s.beta[i4];
    if (!detail::push_beta(s, b5)) break;
    const F a5 = u - (s.alpha[k + 2] + u * v - s.alpha[3 * k + 2] * s.beta[i4]) / b5;
    s.alpha.push_back(a5);
    if (i4 + 2 > n) break;
    const F a6 = u - a5;
    s.alpha.push_back(a6);
    if (!detail::push_beta(s, v - a5 * a6)) break;
  }
  return s;
}

enum class Verdict { BadlyApproximableUpTo, NonlinearAt };

inline const char* to_string(Verdict v) {
  return v == Verdict::BadlyApproximableUpTo ? "badly_approximable_up_to" : "nonlinear_at";
}

/// Outcome of running the recurrence: either no beta vanished through
/// `index` terms, or beta_index = 0 and the index-th partial quotient is not
/// linear.
template <class F>
struct Classification {
  Verdict verdict = Verdict::BadlyApproximableUpTo;
  std::size_t index = 0;
  CoeffSeq<F> terms;
  MahlerParams<F> params;

  bool badly_approximable() const { return verdict == Verdict::BadlyApproximableUpTo; }
};

/// Runs the d = 2 or d = 3 recurrence for n terms.
template <class F>
Classification<F> classify(const MahlerParams<F>& params, std::size_t n) {
  params.validate();
  Classification<F> c;
  c.params = params;
  if (params.d == 2) c.terms = recur_d2(params.u[0], n);
  else if (params.d == 3) c.terms = recur_d3(params.u[0], params.u[1], n);
  else
    throw UnsupportedDegree("closed-form recurrences exist for d = 2, 3 only; got d = " + std::to_string(params.d));
  if (c.terms.stop) {
    c.verdict = Verdict::NonlinearAt;
    c.index = *c.terms.stop;
  } else {
    c.index = n;
  }
  return c;
}

struct PropositionReport {
  bool holds = true;
  int checked_k = -1;           ///< largest k whose identities were all checked
  std::string failure;          ///< first failing identity, empty when all hold
};

/// Checks the block-continuant identities for k = 0 .. k_max:
///   K^1 over d k + 1 .. d (k+1)   = beta_(dk+1) P*(x)
///   K^1 over d k + 1 .. d (k+2)   = beta_(dk+1) (x^d + alpha_(k+2)) P*(x)
///   K^0 over d k + 1 .. d (k+2)   = beta_(k+2) + (x^d + alpha_(k+2)) K^0 over d k + 1 .. d (k+1)
/// The modified CF must be all-linear through index d (k_max + 2); a
/// nonlinear quotient in range is reported as a failure.
template <class F>
PropositionReport verify_propositions(const MahlerParams<F>& params, const ModifiedCF<F>& cf, int k_max) {
  params.validate();
  const std::size_t d = static_cast<std::size_t>(params.d);
  const std::size_t need = d * (static_cast<std::size_t>(k_max) + 2);
  if (k_max < 0 || cf.terms() < need)
    throw InsufficientTerms("need " + std::to_string(need) + " partial quotients, have " +
                            std::to_string(cf.terms()));
  PropositionReport rep;
  for (std::size_t i = 1; i <= need; ++i) {
    if (cf.a_hat[i].degree() != 1) {
      rep.holds = false;
      rep.failure = "partial quotient " + std::to_string(i) + " has degree " + std::to_string(cf.a_hat[i].degree());
      return rep;
    }
  }
  const Polynomial<F> ps = p_star(params);
  const Polynomial<F> xd = Polynomial<F>::monomial(F(1), d);
  for (std::size_t k = 0; k <= static_cast<std::size_t>(k_max); ++k) {
    const std::size_t lo = d * k + 1;
    const F& b_lo = cf.beta[lo];
    const Polynomial<F> shifted = xd + Polynomial<F>::constant(cf.alpha(k + 2));
    const std::string at = " at k = " + std::to_string(k);
    if (!(continuant_block(ContinuantKind::K1, cf, lo, d * (k + 1)) == ps * b_lo)) {
      rep.holds = false;
      rep.failure = "K^1_d identity" + at;
      return rep;
    }
    if (!(continuant_block(ContinuantKind::K1, cf, lo, d * (k + 2)) == shifted * ps * b_lo)) {
      rep.holds = false;
      rep.failure = "K^1_2d identity" + at;
      return rep;
    }
    const Polynomial<F> rhs =
        Polynomial<F>::constant(cf.beta[k + 2]) + shifted * continuant_block(ContinuantKind::K0, cf, lo, d * (k + 1));
    if (!(continuant_block(ContinuantKind::K0, cf, lo, d * (k + 2)) == rhs)) {
      rep.holds = false;
      rep.failure = "K^0_2d identity" + at;
      return rep;
    }
    rep.checked_k = static_cast<int>(k);
  }
  return rep;
}

}  // namespace mahlercf
