#include <catch_amalgamated.hpp>

#include <set>
#include <sstream>

#include <json.hpp>

#include "mahlercf/mahlercf.hpp"

using namespace mahlercf;
using Q = Rational;

TEST_CASE("family detection", "[scan]") {
  CHECK(family_detect(3, 9) == Family::Square);
  CHECK(family_detect(-3, 9) == Family::Square);
  CHECK(family_detect(0, 0) == Family::Square);
  CHECK(family_detect(1, -2) == Family::Cubic);
  CHECK(family_detect(-1, -2) == Family::Cubic);
  CHECK(family_detect(-8, -20) == Family::Cubic);
  CHECK(family_detect(27, -90) == Family::Cubic);
  CHECK(family_detect(2, 1) == Family::Special);
  CHECK(family_detect(-2, 1) == Family::Special);
  CHECK(family_detect(5, 3) == Family::None);
  CHECK(family_detect(8, 20) == Family::None);
  CHECK(std::string(to_string(Family::Cubic)) == "CUBIC");
  CHECK(detail::exact_cbrt(-27) == -3);
  CHECK(detail::exact_cbrt(0) == 0);
  CHECK_FALSE(detail::exact_cbrt(26));
}

TEST_CASE("rational points are exactly those with a one-quotient expansion", "[scan]") {
  for (long u = -4; u <= 4; ++u)
    for (long v = -4; v <= 4; ++v) {
      INFO("(" << u << "," << v << ")");
      CHECK(rational_point(u, v) == rational_closed_form(MahlerParams<Q>(3, {Q(u), Q(v)})).has_value());
    }
}

TEST_CASE("small grid against the series expansion", "[scan]") {
  const std::size_t terms = 12;
  const auto grid = scan_grid(3, terms, 1);
  REQUIRE(grid.size() == 49);
  for (const auto& r : grid) {
    INFO("(" << r.u << "," << r.v << ")");
    const RawCF<Q> cf = expand_g(MahlerParams<Q>(3, {Q(r.u), Q(r.v)}), terms);
    // All quotients linear through `terms` <=> no beta vanished.
    bool linear = cf.terms() == terms;
    for (std::size_t k = 1; k < cf.a.size(); ++k) linear = linear && cf.a[k].degree() == 1;
    CHECK(r.ok == linear);
    if (!r.ok) {
      CHECK(r.family != Family::None);
      // The first nonlinear quotient sits at the stop index.
      if (cf.terms() >= *r.stop) CHECK(cf.a[*r.stop].degree() > 1);
    }
  }
}

TEST_CASE("vanishing betas occur only on the families", "[scan]") {
  const auto grid = scan_grid(50, 30, default_jobs());
  std::set<std::pair<long, long>> stopped, family;
  for (const auto& r : grid) {
    if (!r.ok) stopped.emplace(r.u, r.v);
    if (r.family != Family::None) family.emplace(r.u, r.v);
  }
  CHECK(stopped == family);
  CHECK(stopped.size() == 21);
}

TEST_CASE("scan output does not depend on the worker count", "[scan]") {
  const auto one = scan_grid(8, 20, 1);
  const auto four = scan_grid(8, 20, 4);
  REQUIRE(one.size() == four.size());
  std::ostringstream a, b;
  for (const auto& r : one) write_csv(a, r);
  for (const auto& r : four) write_csv(b, r);
  CHECK(a.str() == b.str());
  CHECK(one.front().u == -8);
  CHECK(one.front().v == -8);
  CHECK(one[1].v == -7);
  CHECK_THROWS_AS(scan_grid(0, 20), InvalidArgument);
  CHECK_THROWS_AS(scan_grid(3, 1), InvalidArgument);
}

TEST_CASE("record formats", "[scan]") {
  std::ostringstream csv;
  write_csv_header(csv);
  write_csv(csv, scan_point(2, 1, 30));
  write_csv(csv, scan_point(5, 3, 30));
  write_csv(csv, scan_point(1, 1, 30));
  CHECK(csv.str() ==
        "u,v,verdict,stop_index,family,terms,note\n"
        "2,1,beta_zero,6,SPECIAL,30,\n"
        "5,3,ok,,NONE,30,\n"
        "1,1,beta_zero,2,SQUARE,30,rational\n");

  std::ostringstream js;
  write_jsonl(js, scan_point(-8, -20, 30));
  const auto j = nlohmann::json::parse(js.str());
  CHECK(j["u"] == -8);
  CHECK(j["v"] == -20);
  CHECK(j["verdict"] == "beta_zero");
  CHECK(j["stop_index"] == 3);
  CHECK(j["family"] == "CUBIC");
  CHECK(j["terms"] == 30);
  CHECK(j["note"].is_null());
  std::ostringstream ok;
  write_jsonl(ok, scan_point(5, 3, 30));
  CHECK(nlohmann::json::parse(ok.str())["stop_index"].is_null());
}

TEST_CASE("theorem suites", "[scan][suite]") {
  const SuiteReport thm3 = verify_suite("thm3", default_suite("thm3"));
  CHECK(thm3.cases == 9);
  CHECK(thm3.summary() == "thm3: 9 cases verified through horizon 100");
  CHECK(verify_suite("thm4", default_suite("thm4")).cases == 40);
  const SuiteReport thm6 = verify_suite("thm6", default_suite("thm6"));
  CHECK(thm6.cases == 21);
  CHECK(thm6.lines.back() == thm6.summary());
  CHECK_THROWS_AS(default_suite("thm5"), InvalidArgument);
}

TEST_CASE("suite failures carry a witness", "[scan][suite]") {
  SuiteConfig bad;
  bad.pairs = {{Q(2), Q(1)}};
  bad.horizon = 30;
  CHECK_THROWS_AS(verify_suite("thm6", bad), InvalidArgument);  // outside the hypotheses
  try {
    detail::require_no_stop(recur_d3(Q(2), Q(1), 30), "(u,v)=(2,1)");
    FAIL("expected AssertionFailed");
  } catch (const AssertionFailed& e) {
    CHECK(e.witness() == "(u,v)=(2,1): beta_6 = 0");
  }
  try {
    detail::check_range("w", "alpha", 5, Q(7), Q(0), Q(3));
    FAIL("expected AssertionFailed");
  } catch (const AssertionFailed& e) {
    CHECK(e.witness() == "w: alpha_5 = 7 outside [0, 3]");
  }
}
