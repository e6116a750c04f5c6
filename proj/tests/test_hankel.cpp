#include <catch_amalgamated.hpp>

#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace mahlercf;
using mahlercf::testing::Gen;
using Q = Rational;

TEST_CASE("Hankel determinant examples", "[hankel]") {
  CHECK(hankel_det(std::vector<Q>{}, 0) == Q(1));
  CHECK(hankel_det(std::vector<Q>{Q(5)}, 1) == Q(5));
  CHECK(hankel_det(std::vector<Q>{Q(1), Q(2), Q(3)}, 2) == Q(-1));
  // Leading zero needs a row swap.
  CHECK(hankel_det(std::vector<Q>{Q(0), Q(1), Q(0)}, 2) == Q(-1));
  CHECK(hankel_det(std::vector<Q>{Q(1), Q(1), Q(1), Q(1), Q(1)}, 3) == Q(0));
  CHECK_THROWS_AS(hankel_det(std::vector<Q>{Q(1), Q(2)}, 2), InsufficientCoefficients);
}

TEST_CASE("Bareiss agrees with cofactor expansion", "[hankel][property]") {
  Gen gen(51);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 6));
    std::vector<Q> c;
    for (std::size_t k = 0; k < 2 * n - 1; ++k) c.push_back(gen.coin() ? Q(0) : gen.rational(5, 3));
    INFO("seed " << gen.seed() << " iteration " << i);
    CHECK(hankel_det(c, n) == testing::cofactor_hankel(c, n));
  }
}

TEST_CASE("profile, direct determinants and convergent degrees agree", "[hankel][property]") {
  Gen gen(52);
  const long N = 10;
  int with_gaps = 0;
  for (int i = 0; i < 20; ++i) {
    const int d = static_cast<int>(gen.integer(2, 4));
    std::vector<Q> u;
    // Small integers make nonlinear quotients (vanishing determinants) common.
    for (int j = 1; j < d; ++j) u.push_back(Q(gen.integer(-3, 3)));
    const MahlerParams<Q> params(d, u);
    const auto c = fhat_coeffs(params, 2 * N);
    const LaurentSeries<Q> g = g_series(params, 8 * N);
    const ModifiedCF<Q> m = to_modified(cf_expand(g, static_cast<std::size_t>(N) + 1));
    const HankelProfile<Q> prof = hankel_from_cf(m, N);
    const std::set<long> degs = hankel_nonzero_degrees(g, N);
    INFO("seed " << gen.seed() << " " << params.str());
    for (long n = 1; n <= N; ++n) {
      INFO("n " << n);
      const Q h = hankel_det(c, static_cast<std::size_t>(n));
      CHECK(prof.nonzero(n) == !h.is_zero());
      CHECK(degs.count(n) == (h.is_zero() ? 0u : 1u));
      if (prof.nonzero(n)) CHECK(prof.H.at(n) == h);
    }
    CHECK(prof.zero_set.size() + prof.H.size() == static_cast<std::size_t>(N));
    if (!prof.zero_set.empty()) ++with_gaps;
  }
  CHECK(with_gaps >= 3);
}

TEST_CASE("profile signs for nonlinear expansions", "[hankel]") {
  for (const auto& params : {MahlerParams<Q>(3, {Q(2), Q(1)}), MahlerParams<Q>(3, {Q(1), Q(-2)}),
                             MahlerParams<Q>(3, {Q(3), Q(9)}), MahlerParams<Q>(3, {Q(-8), Q(-20)}),
                             MahlerParams<Q>(5, {Q(1), Q(0), Q(0), Q(-1)})}) {
    const long N = 14;
    const auto c = fhat_coeffs(params, 2 * N);
    const HankelProfile<Q> prof = hankel_from_cf(to_modified(expand_g(params, N + 1)), N);
    INFO(params.str());
    for (long n = 1; n <= N; ++n) {
      INFO("n " << n);
      CHECK(prof.nonzero(n) == !hankel_det(c, static_cast<std::size_t>(n)).is_zero());
      if (prof.nonzero(n)) CHECK(prof.H.at(n) == hankel_det(c, static_cast<std::size_t>(n)));
    }
  }
}

TEST_CASE("vanishing determinants of g_(2,1)", "[hankel]") {
  const MahlerParams<Q> params(3, {Q(2), Q(1)});
  const HankelProfile<Q> prof = hankel_from_cf(to_modified(expand_g(params, 30)), 30);
  // a_6 has degree 3, so s jumps from 5 to 8.
  REQUIRE(prof.s.size() >= 6);
  CHECK(std::vector<long>(prof.s.begin(), prof.s.begin() + 6) == std::vector<long>{1, 2, 3, 4, 5, 8});
  CHECK(std::find(prof.zero_set.begin(), prof.zero_set.end(), 6) != prof.zero_set.end());
  CHECK(std::find(prof.zero_set.begin(), prof.zero_set.end(), 7) != prof.zero_set.end());
  // Lifting the fifth convergent through the functional equation gives
  // denominators of degree 3 * 5 = 15 and 9 * 5 = 45 with larger gaps behind them.
  CHECK(prof.nonzero(15));
  CHECK_FALSE(prof.nonzero(16));
}

TEST_CASE("nonzero degree sets", "[hankel]") {
  SECTION("badly approximable: every degree") {
    const auto degs = hankel_nonzero_degrees(g_series(MahlerParams<Q>(2, {Q(-1)}), 60), 25);
    CHECK(degs.size() == 25);
  }
  SECTION("rational g = 1/(x - 1): only degree 1") {
    const auto degs = hankel_nonzero_degrees(g_series(MahlerParams<Q>(2, {Q(1)}), 40), 20);
    CHECK(degs == std::set<long>{1});
    const HankelProfile<Q> prof = hankel_from_cf(to_modified(cf_expand(g_series(MahlerParams<Q>(2, {Q(1)}), 40), 20)), 20);
    CHECK(prof.zero_set.size() == 19);
    CHECK(prof.H.at(1) == Q(1));
  }
  SECTION("not enough precision") {
    CHECK_THROWS_AS(hankel_nonzero_degrees(g_series(MahlerParams<Q>(2, {Q(-1)}), 10), 25), PrecisionExhausted);
    CHECK_THROWS_AS(hankel_from_cf(to_modified(expand_g(MahlerParams<Q>(2, {Q(-1)}), 5)), 25), InsufficientTerms);
  }
}
