#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mahlercf/contfrac.hpp"
#include "mahlercf/errors.hpp"
#include "mahlercf/laurent_series.hpp"

namespace mahlercf {

/// det [c_(i+j)] for 0 <= i, j < n by fraction-free (Bareiss) elimination
/// with row pivoting. H_0 = 1.
template <class F>
F hankel_det(const std::vector<F>& c, std::size_t n) {
  if (n == 0) return F(1);
  if (c.size() < 2 * n - 1)
    throw InsufficientCoefficients("order " + std::to_string(n) + " needs " + std::to_string(2 * n - 1) +
                                   " coefficients, have " + std::to_string(c.size()));
  std::vector<std::vector<F>> m(n, std::vector<F>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = c[i + j];
  F prev(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (detail::coeff_is_zero(m[k][k])) {
      std::size_t r = k + 1;
      while (r < n && detail::coeff_is_zero(m[r][k])) ++r;
      if (r == n) return F(0);
      std::swap(m[k], m[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      m[i][k] = F(0);
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

/// Hankel determinants of f_hat predicted by the continued fraction of
/// g(x) = x^-1 f_hat(1/x).
template <class F>
struct HankelProfile {
  long N = 0;
  std::vector<long> s;       ///< degrees s_1 < s_2 < ... <= N of the convergent denominators
  std::map<long, F> H;       ///< H_(s_i)
  std::vector<long> zero_set;  ///< 1 <= n <= N with H_n = 0

  bool nonzero(long n) const { return H.count(n) != 0; }
};

namespace detail {

// Degrees s_i <= N of the convergent denominators, and whether every n <= N
// not listed is certified to be absent.
template <class F>
std::pair<std::vector<long>, bool> denominator_degrees(const ModifiedCF<F>& cf, long N) {
  std::vector<long> s;
  long total = 0;
  for (std::size_t i = 1; i < cf.a_hat.size(); ++i) {
    total += cf.a_hat[i].degree();
    if (total > N) return {s, true};
    s.push_back(total);
  }
  if (cf.status == CfStatus::Terminated) return {s, true};
  if (cf.next_degree_at_least && total + *cf.next_degree_at_least > N) return {s, true};
  return {s, total >= N};
}

}  // namespace detail

/// H_(s_i) = (-1)^eps prod_(j<i) v_j^(s_i - s_j) with s_0 = 0,
/// eps = sum_(j<i) k_j (k_j + 1) / 2, k_j = deg a_(j+1) - 1, and
/// v_0 = beta_1, v_j = -beta_(j+1) for j >= 1. Every other H_n vanishes.
template <class F>
HankelProfile<F> hankel_from_cf(const ModifiedCF<F>& cf, long N) {
  auto [s, certified] = detail::denominator_degrees(cf, N);
  if (!certified)
    throw InsufficientTerms("continued fraction does not reach denominator degree " + std::to_string(N));
  HankelProfile<F> prof;
  prof.N = N;
  prof.s = s;
  std::vector<long> all{0};
  all.insert(all.end(), s.begin(), s.end());
  long eps = 0;
  for (std::size_t i = 1; i < all.size(); ++i) {
    const long k = cf.a_hat[i].degree() - 1;
    eps += k * (k + 1) / 2;
    F h(1);
    for (std::size_t j = 0; j < i; ++j) {
      const F v = j == 0 ? cf.beta[1] : -cf.beta[j + 1];
      F term(1);
      for (long e = 0; e < all[i] - all[j]; ++e) term *= v;
      h *= term;
    }
    prof.H.emplace(all[i], eps % 2 ? -h : h);
  }
  for (long n = 1; n <= N; ++n)
    if (!prof.nonzero(n)) prof.zero_set.push_back(n);
  return prof;
}

/// { deg q : p/q a convergent of g, deg q <= N }. Convergents from the
/// expansion are coprime, so this is the set of n with H_n(f_hat) != 0.
template <class F>
std::set<long> hankel_nonzero_degrees(const LaurentSeries<F>& g, long N) {
  const ModifiedCF<F> cf = to_modified(cf_expand(g, static_cast<std::size_t>(N) + 1));
  auto [s, certified] = detail::denominator_degrees(cf, N);
  if (!certified)
    throw PrecisionExhausted("series precision does not certify convergent degrees up to " + std::to_string(N));
  return {s.begin(), s.end()};
}

}  // namespace mahlercf
