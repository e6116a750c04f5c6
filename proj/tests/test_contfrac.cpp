#include <catch_amalgamated.hpp>

#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace mahlercf;
using mahlercf::testing::Gen;
using Q = Rational;
using Poly = Polynomial<Q>;
using Series = LaurentSeries<Q>;
using RF = RationalFunction;
using PolyT = Polynomial<RF>;

namespace {

Poly poly(std::vector<Q> c) { return Poly(std::move(c)); }

std::vector<long> degrees(const RawCF<Q>& cf) {
  std::vector<long> out;
  for (const auto& a : cf.a) out.push_back(a.is_zero() ? 0 : a.degree());
  return out;
}

// Series with coefficients c_1, c_2, ... of x^-1, x^-2, ...
Series tail_series(const std::vector<Q>& c) { return Series::truncated(-1, c, static_cast<long>(c.size())); }

// The value of a continued fraction truncated at n, as a series.
Series cf_value(const ModifiedCF<Q>& m, std::size_t n, long prec) {
  const Convergent<Q> c = convergent(m, n);
  return Series::from_polynomial(c.p) * series_invert(Series::from_polynomial(c.q), prec + 2 * c.q.degree() + 2);
}

}  // namespace

TEST_CASE("expansion of g for d = 2, u = -1 has linear quotients", "[contfrac]") {
  const auto g = g_series(MahlerParams<Q>(2, {Q(-1)}), 20);
  const RawCF<Q> cf = cf_expand(g, 4);
  CHECK(degrees(cf) == std::vector<long>{0, 1, 1, 1, 1});
  CHECK(cf.status == CfStatus::Complete);
}

TEST_CASE("expansion of a rational function terminates", "[contfrac]") {
  const Q u(3);
  const Series num = Series::from_polynomial(Poly::linear(u));
  const Series den = Series::from_polynomial(poly({-u, Q(0), Q(1)}));
  const RawCF<Q> cf = cf_expand(num * series_invert(den, 40), 10);
  CHECK(cf.status == CfStatus::Exhausted);  // truncated input: the zero tail is not certified
  CHECK(cf.terms() == 2);
  const RawCF<Q> exact = cf_expand(Poly::linear(u), poly({-u, Q(0), Q(1)}), 10);
  CHECK(exact.status == CfStatus::Terminated);
  CHECK(exact.terms() == 2);
  CHECK(exact.a[1] == cf.a[1]);
  CHECK(exact.a[2] == cf.a[2]);

  const RawCF<Q> inv_x = cf_expand(Series::monomial(Q(1), -1), 5);
  CHECK(inv_x.status == CfStatus::Terminated);
  CHECK(inv_x.a.size() == 2);
  CHECK(inv_x.a[0].is_zero());
  CHECK(inv_x.a[1] == Poly::x());
}

TEST_CASE("exhaustion is recorded, not guessed", "[contfrac]") {
  const Series g = tail_series({Q(1), Q(2), Q(3), Q(5), Q(7), Q(11)});
  const RawCF<Q> cf = cf_expand(g, 10);
  CHECK(cf.status == CfStatus::Exhausted);
  REQUIRE(cf.exhausted_at);
  CHECK(*cf.exhausted_at == cf.a.size());
  CHECK(cf.terms() <= 3);  // 6 known coefficients certify 2n + 2 <= 6 linear quotients at most
}

TEST_CASE("to_modified on g for d = 2, u = 2", "[contfrac]") {
  const auto g = g_series(MahlerParams<Q>(2, {Q(2)}), 20);
  const ModifiedCF<Q> m = to_modified(cf_expand(g, 4));
  REQUIRE(m.terms() == 4);
  CHECK(m.a_hat[1] == Poly::linear(Q(-2)));
  CHECK(m.a_hat[2] == Poly::linear(Q(2)));
  CHECK(m.a_hat[3] == Poly::linear(Q(-2)));
  CHECK(m.a_hat[4] == Poly::linear(Q(2)));
  CHECK(std::vector<Q>(m.beta.begin() + 1, m.beta.end()) == std::vector<Q>{Q(1), Q(2), Q(-1), Q(7)});
  CHECK(m.beta[0] == Q(1));
}

TEST_CASE("monic raw fractions have unit betas", "[contfrac]") {
  RawCF<Q> raw;
  raw.a = {Poly(), Poly::linear(Q(1)), poly({Q(2), Q(3), Q(1)}), Poly::linear(Q(-5))};
  const ModifiedCF<Q> m = to_modified(raw);
  for (const auto& b : m.beta) CHECK(b == Q(1));
}

TEST_CASE("to_modified over Q(v): d = 3, u = 0", "[contfrac][symbolic]") {
  const RF v = RF::variable();
  const MahlerParams<RF> params(3, {RF(0), v});
  const ModifiedCF<RF> m = to_modified(cf_expand(g_series(params, 20), 6));
  REQUIRE(m.terms() == 6);
  CHECK(m.beta[4] == RF(1) / v);
  CHECK(m.beta[5] == -(v * v + RF(1)) / v);
  CHECK(m.beta[6] == v);
}

TEST_CASE("round trip through the modified form", "[contfrac][property]") {
  Gen gen(21);
  for (int i = 0; i < 100; ++i) {
    RawCF<Q> raw;
    raw.a.push_back(gen.polynomial(2));
    for (int k = 0; k < 8; ++k) {
      Poly a;
      while (a.degree() < 1) a = gen.nonzero_polynomial(3);
      raw.a.push_back(a);
    }
    const RawCF<Q> back = reconstruct_raw(to_modified(raw));
    INFO("seed " << gen.seed() << " iteration " << i);
    CHECK(back.a == raw.a);
  }
}

TEST_CASE("convergent examples", "[contfrac]") {
  SECTION("n = 3 for d = 2 with symbolic u") {
    const RF u = RF::variable();
    const ModifiedCF<RF> m = to_modified(cf_expand(g_series(MahlerParams<RF>(2, {u}), 12), 3));
    const Convergent<RF> c = convergent(m, 3);
    const PolyT x = PolyT::x();
    const PolyT one = PolyT::constant(RF(1));
    CHECK(c.p == x * x - one * (u * u + RF(1)));
    CHECK(c.q == (x - one * u) * (x * x - one * (u + RF(1))));
  }
  SECTION("n = 5 for d = 3, (u, v) = (2, 1)") {
    const ModifiedCF<Q> m = to_modified(expand_g(MahlerParams<Q>(3, {Q(2), Q(1)}), 5));
    const Convergent<Q> c = convergent(m, 5);
    CHECK(c.q == poly({Q(-1), Q(1), Q(-1), Q(1), Q(-1), Q(1)}));
    // q_5 g has polynomial part x^4 + x^3 + 2x + 2 (checked by hand from
    // g = x^-1 + 2x^-2 + x^-3 + 2x^-4 + 4x^-5 + ...).
    CHECK(c.p == poly({Q(2), Q(2), Q(0), Q(1), Q(1)}));
  }
  SECTION("n = 0") {
    const ModifiedCF<Q> m = to_modified(expand_g(MahlerParams<Q>(2, {Q(5)}), 3));
    const Convergent<Q> c = convergent(m, 0);
    CHECK(c.p == m.a_hat[0]);
    CHECK(c.q == Poly::constant(Q(1)));
    CHECK_THROWS_AS(convergent(m, 4), IndexOutOfRange);
  }
}

TEST_CASE("continuant base cases", "[contfrac]") {
  const std::vector<Poly> none;
  const std::vector<Q> no_beta;
  CHECK(continuant<Q>(ContinuantKind::K0, none, no_beta) == Poly::constant(Q(1)));
  CHECK(continuant<Q>(ContinuantKind::K1, none, no_beta).is_zero());
  const std::vector<Poly> a{poly({Q(3), Q(1)})};
  const std::vector<Q> b{Q(7)};
  CHECK(continuant<Q>(ContinuantKind::K0, a, b) == a[0]);
  CHECK(continuant<Q>(ContinuantKind::K1, a, b) == Poly::constant(Q(7)));
  CHECK_THROWS_AS(continuant<Q>(ContinuantKind::K0, a, no_beta), InvalidArgument);
}

TEST_CASE("determinant identity of convergents", "[contfrac][property]") {
  Gen gen(22);
  for (int i = 0; i < 40; ++i) {
    const ModifiedCF<Q> m = gen.modified_cf(8);
    const auto cs = convergents(m, 8);
    Q prod(1);
    for (std::size_t n = 0; n + 1 <= 8; ++n) {
      prod *= m.beta[n + 1];
      const Poly det = cs[n + 1].p * cs[n].q - cs[n].p * cs[n + 1].q;
      INFO("seed " << gen.seed() << " iteration " << i << " n " << n);
      CHECK(det == Poly::constant(n % 2 ? -prod : prod));
      CHECK(gcd(cs[n + 1].p, cs[n + 1].q).degree() == 0);
      CHECK(cs[n + 1].q.is_monic());
    }
  }
}

TEST_CASE("continuants compose convergents", "[contfrac][property]") {
  Gen gen(23);
  for (int i = 0; i < 20; ++i) {
    const ModifiedCF<Q> m = gen.modified_cf(17);
    const auto cs = convergents(m, 17);
    // p_(-1) = 1, q_(-1) = 0.
    auto p_at = [&](long n) { return n < 0 ? Poly::constant(Q(1)) : cs[static_cast<std::size_t>(n)].p; };
    auto q_at = [&](long n) { return n < 0 ? Poly() : cs[static_cast<std::size_t>(n)].q; };
    for (std::size_t n = 0; n <= 8; ++n) {
      for (std::size_t len = 0; len <= 8 && n + len <= 17; ++len) {
        const Poly k0 = len == 0 ? Poly::constant(Q(1)) : continuant_block(ContinuantKind::K0, m, n + 1, n + len);
        const Poly k1 = len == 0 ? Poly() : continuant_block(ContinuantKind::K1, m, n + 1, n + len);
        INFO("seed " << gen.seed() << " n " << n << " m " << len);
        CHECK(cs[n + len].p == k0 * p_at(static_cast<long>(n)) + k1 * p_at(static_cast<long>(n) - 1));
        CHECK(cs[n + len].q == k0 * q_at(static_cast<long>(n)) + k1 * q_at(static_cast<long>(n) - 1));
      }
    }
  }
}

TEST_CASE("continuant degrees and leading coefficients", "[contfrac][property]") {
  Gen gen(24);
  for (int i = 0; i < 100; ++i) {
    const std::size_t len = static_cast<std::size_t>(gen.integer(1, 8));
    const ModifiedCF<Q> m = gen.modified_cf(len);
    const Poly k0 = continuant_block(ContinuantKind::K0, m, 1, len);
    const Poly k1 = continuant_block(ContinuantKind::K1, m, 1, len);
    long sum_all = 0, sum_tail = 0;
    for (std::size_t k = 1; k <= len; ++k) {
      sum_all += m.a_hat[k].degree();
      if (k >= 2) sum_tail += m.a_hat[k].degree();
    }
    INFO("seed " << gen.seed() << " iteration " << i);
    CHECK(k0.degree() == sum_all);
    CHECK(k0.is_monic());
    CHECK(k1.degree() == sum_tail);
    CHECK(k1.leading() == m.beta[1]);
  }
}

TEST_CASE("expansion reproduces every certified coefficient", "[contfrac][property]") {
  Gen gen(25);
  for (int i = 0; i < 30; ++i) {
    std::vector<Q> c;
    c.push_back(gen.nonzero_rational());
    for (int k = 1; k < 20; ++k) c.push_back(gen.rational());
    const Series f = tail_series(c);
    const RawCF<Q> raw = cf_expand(f, 20);
    const ModifiedCF<Q> m = to_modified(raw);
    INFO("seed " << gen.seed() << " iteration " << i << " terms " << raw.terms());
    REQUIRE(raw.terms() >= 1);
    const Series back = cf_value(m, m.terms(), 20);
    const long deg_q = convergent(m, m.terms()).q.degree();
    // The last convergent agrees with f beyond x^(-2 deg q).
    for (long e = -1; e >= -std::min<long>(20, 2 * deg_q); --e) CHECK(back.coefficient(e) == f.coefficient(e));
  }
}

TEST_CASE("approximation rate examples", "[contfrac]") {
  SECTION("fifth convergent of g_(2,1) has rate 3") {
    const auto params = MahlerParams<Q>(3, {Q(2), Q(1)});
    const Series g = g_series(params, 40);
    const Convergent<Q> c = convergent(to_modified(expand_g(params, 5)), 5);
    CHECK(approx_rate(g, c.p, c.q) == 3);
    CHECK(is_convergent(g, c.p, c.q));
    // q_5 g - p_5 = 3x^-8 + ...
    const Series r = Series::from_polynomial(c.q) * g - Series::from_polynomial(c.p);
    CHECK(r.valuation() == -8);
    CHECK(r.leading() == Q(3));
  }
  SECTION("second convergent for (1, -2) has rate 3") {
    const auto params = MahlerParams<Q>(3, {Q(1), Q(-2)});
    const Series g = g_series(params, 40);
    const Convergent<Q> c = convergent(to_modified(expand_g(params, 2)), 2);
    CHECK(c.q == poly({Q(1), Q(1), Q(1)}));
    CHECK(approx_rate(g, c.p, c.q) == 3);
  }
  SECTION("badly approximable series have rate 1 everywhere") {
    const auto params = MahlerParams<Q>(2, {Q(-1)});
    const Series g = g_series(params, 60);
    const auto cs = convergents(to_modified(expand_g(params, 20)), 20);
    for (std::size_t n = 1; n <= 20; ++n) CHECK(approx_rate(g, cs[n].p, cs[n].q) == 1);
  }
  SECTION("errors") {
    const Series g = g_series(MahlerParams<Q>(2, {Q(-1)}), 10);
    CHECK_THROWS_AS(approx_rate(g, Poly::constant(Q(5)), Poly::x()), NotApproximating);
    CHECK_THROWS_AS(approx_rate(g, Poly(), Poly()), DivisionByZero);
    // Exact rational input: the rate is infinite.
    CHECK(approx_rate(Series::monomial(Q(1), -1), Poly::constant(Q(1)), Poly::x()) == kInfiniteRate);
    // Rate of an exactly matching convergent against a truncated series is not certifiable.
    const Series trunc = Series::truncated(-1, {Q(1)}, 4);
    CHECK_THROWS_AS(approx_rate(trunc, Poly::constant(Q(1)), Poly::x()), PrecisionExhausted);
  }
}

TEST_CASE("Legendre criterion in both directions", "[contfrac][property]") {
  Gen gen(26);
  for (int i = 0; i < 20; ++i) {
    const auto params = gen.coin() ? MahlerParams<Q>(2, {gen.rational(4, 3)})
                                   : MahlerParams<Q>(3, {gen.rational(4, 2), gen.rational(4, 2)});
    if (rational_closed_form(params)) continue;  // rational g: rates are unbounded
    const long prec = 40;
    const Series g = g_series(params, prec);
    const ModifiedCF<Q> m = to_modified(cf_expand(g, 10));
    const auto cs = convergents(m, m.terms());
    std::vector<Q> coeffs(prec + 1, Q(0));
    for (long k = 1; k <= prec; ++k) coeffs[static_cast<std::size_t>(k)] = g.coefficient(-k);
    INFO("seed " << gen.seed() << " " << params.str());
    // Every convergent beats 2 deg q.
    for (std::size_t n = 1; n < cs.size(); ++n) CHECK(is_convergent(g, cs[n].p, cs[n].q));
    // Every reduced p/q beating 2 deg q (found by solving the linear
    // conditions directly) is one of the convergents.
    for (std::size_t deg = 1; deg <= 6; ++deg) {
      const auto pq = testing::pade_denominator(coeffs, deg);
      if (!pq) continue;
      const Poly h = gcd(pq->first, pq->second);
      const Poly p = h.is_zero() ? pq->first : exact_div(pq->first, h);
      const Poly q = h.is_zero() ? pq->second : exact_div(pq->second, h);
      if (!is_convergent(g, p, q)) continue;
      bool found = false;
      for (const auto& c : cs)
        if (c.q == q.monic() && c.p * q.leading() == p) found = true;
      CHECK(found);
    }
  }
}
