#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "mahlercf/errors.hpp"
#include "mahlercf/rational.hpp"
#include "mahlercf/recurrence.hpp"

namespace mahlercf {

/// Integer families (u, v) for which some beta vanishes.
enum class Family { None, Square, Cubic, Special };

inline const char* to_string(Family f) {
  switch (f) {
    case Family::None: return "NONE";
    case Family::Square: return "SQUARE";
    case Family::Cubic: return "CUBIC";
    case Family::Special: return "SPECIAL";
  }
  return "?";
}

namespace detail {

// Integer cube root if n is a perfect cube.
inline std::optional<long> exact_cbrt(long n) {
  const bool neg = n < 0;
  const long m = neg ? -n : n;
  long lo = 0, hi = 1;
  while (hi * hi * hi < m) hi *= 2;
  while (lo < hi) {
    const long mid = (lo + hi) / 2;
    if (mid * mid * mid < m) lo = mid + 1;
    else hi = mid;
  }
  if (lo * lo * lo != m) return std::nullopt;
  return neg ? -lo : lo;
}

}  // namespace detail

/// SQUARE: v = u^2; CUBIC: u = +-s^3, v = -s^2 (s^2 + 1); SPECIAL: (+-2, 1).
/// SQUARE wins at (0, 0), the only point carrying two tags.
inline Family family_detect(long u, long v) {
  if (v == u * u) return Family::Square;
  if (const auto s = detail::exact_cbrt(u); s && v == -(*s) * (*s) * ((*s) * (*s) + 1)) return Family::Cubic;
  if ((u == 2 || u == -2) && v == 1) return Family::Special;
  return Family::None;
}

/// d = 3 points where g is a rational function: (0, 0) and (+-1, 1).
inline bool rational_point(long u, long v) { return (u == 0 && v == 0) || ((u == 1 || u == -1) && v == 1); }

struct ScanRecord {
  long u = 0;
  long v = 0;
  bool ok = true;                   ///< no beta vanished through `terms`
  std::optional<std::size_t> stop;  ///< first vanishing beta
  Family family = Family::None;
  std::size_t terms = 0;
  bool rational = false;

  const char* verdict() const { return ok ? "ok" : "beta_zero"; }
};

inline ScanRecord scan_point(long u, long v, std::size_t terms) {
  ScanRecord r;
  r.u = u;
  r.v = v;
  r.terms = terms;
  r.family = family_detect(u, v);
  r.rational = rational_point(u, v);
  const CoeffSeq<Rational> s = recur_d3(Rational(u), Rational(v), terms);
  if (s.stop) {
    r.ok = false;
    r.stop = s.stop;
  }
  return r;
}

/// Worker count from MAHLERCF_JOBS, else the hardware concurrency.
inline unsigned default_jobs() {
  if (const char* env = std::getenv("MAHLERCF_JOBS")) {
    const long j = std::strtol(env, nullptr, 10);
    if (j > 0) return static_cast<unsigned>(j);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Every (u, v) in [-R, R]^2 in lexicographic order. Rows are distributed
/// over `jobs` workers; the output does not depend on the schedule.
inline std::vector<ScanRecord> scan_grid(long R, std::size_t terms, unsigned jobs = 1) {
  if (R < 1) throw InvalidArgument("scan range must be at least 1");
  if (terms < 2) throw InvalidArgument("scan needs at least 2 terms");
  const std::size_t side = static_cast<std::size_t>(2 * R + 1);
  std::vector<ScanRecord> out(side * side);
  std::atomic<std::size_t> next_row{0};
  auto work = [&] {
    for (std::size_t row; (row = next_row.fetch_add(1)) < side;) {
      const long u = -R + static_cast<long>(row);
      for (std::size_t col = 0; col < side; ++col) out[row * side + col] = scan_point(u, -R + static_cast<long>(col), terms);
    }
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(side)));
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return out;
}

inline void write_csv_header(std::ostream& os) { os << "u,v,verdict,stop_index,family,terms,note\n"; }

inline void write_csv(std::ostream& os, const ScanRecord& r) {
  os << r.u << ',' << r.v << ',' << r.verdict() << ',';
  if (r.stop) os << *r.stop;
  os << ',' << to_string(r.family) << ',' << r.terms << ',' << (r.rational ? "rational" : "") << '\n';
}

inline void write_jsonl(std::ostream& os, const ScanRecord& r) {
  os << "{\"u\":" << r.u << ",\"v\":" << r.v << ",\"verdict\":\"" << r.verdict() << "\",\"stop_index\":";
  if (r.stop) os << *r.stop;
  else os << "null";
  os << ",\"family\":\"" << to_string(r.family) << "\",\"terms\":" << r.terms << ",\"note\":"
     << (r.rational ? "\"rational\"" : "null") << "}\n";
}

/// Finite-horizon check of one of the theorem suites.
struct SuiteConfig {
  std::vector<Rational> us;               ///< thm3: values of u
  std::vector<Rational> vs;               ///< thm4: values of v for (0, v); u values for (u, 0) come from `us`
  std::vector<std::pair<Rational, Rational>> pairs;  ///< thm6: sampled (u, v)
  std::size_t horizon = 0;
};

struct SuiteReport {
  std::string name;
  std::size_t cases = 0;
  std::size_t horizon = 0;
  std::vector<std::string> lines;

  std::string summary() const {
    return name + ": " + std::to_string(cases) + " cases verified through horizon " + std::to_string(horizon);
  }
};

/// Default configurations for the three suites.
inline SuiteConfig default_suite(const std::string& name) {
  SuiteConfig c;
  if (name == "thm3") {
    for (long u = -5; u <= 5; ++u)
      if (u != 0 && u != 1) c.us.emplace_back(u);
    c.horizon = 100;
  } else if (name == "thm4") {
    for (long x = -10; x <= 10; ++x)
      if (x != 0) {
        c.us.emplace_back(x);
        c.vs.emplace_back(x);
      }
    c.horizon = 60;
  } else if (name == "thm6") {
    for (long u = 3; u <= 6; ++u) {
      const long v0 = std::max(3 * u * u - 1, 2 * u * u + 8);
      for (long dv : {0L, 1L, 7L, 40L, 1000L}) c.pairs.emplace_back(Rational(u), Rational(v0 + dv));
    }
    c.pairs.emplace_back(Rational(-3), Rational(26));
    c.horizon = 90;
  } else {
    throw InvalidArgument("unknown suite '" + name + "' (expected thm3, thm4 or thm6)");
  }
  return c;
}

namespace detail {

inline void require_no_stop(const CoeffSeq<Rational>& s, const std::string& who) {
  if (s.stop) throw AssertionFailed(who + ": beta_" + std::to_string(*s.stop) + " = 0");
}

inline void check_range(const std::string& who, const char* what, std::size_t idx, const Rational& value,
                        const Rational& lo, const Rational& hi) {
  if (value < lo || value > hi)
    throw AssertionFailed(who + ": " + what + "_" + std::to_string(idx) + " = " + value.str() + " outside [" +
                          lo.str() + ", " + hi.str() + "]");
}

}  // namespace detail

/// thm3: d = 2, every u in the set (0 and 1 excluded) has no vanishing beta.
/// thm4: d = 3, the same for (u, 0) and (0, v).
/// thm6: d = 3, (u, v) with u^2 >= 6 and v >= max(3u^2 - 1, 2u^2 + 8) has no
///       vanishing beta and, after replacing u by |u|, the envelope
///         2u <= alpha_(3k+2) <= 3u,  -2u <= alpha_(3k+3) <= -u,
///         |beta_(3k+1)| <= 1,  u^2 - v - 1 <= beta_(3k+2) <= u^2 - v + 1,
///         v + 2u^2 <= beta_(3k+3) <= v + 6u^2.
/// Failures throw AssertionFailed naming the parameter, index and value.
inline SuiteReport verify_suite(const std::string& name, const SuiteConfig& cfg) {
  SuiteReport rep;
  rep.name = name;
  rep.horizon = cfg.horizon;
  if (name == "thm3") {
    for (const auto& u : cfg.us) {
      if (u.is_zero() || u == Rational(1)) continue;
      detail::require_no_stop(recur_d2(u, cfg.horizon), "d=2 u=" + u.str());
      ++rep.cases;
    }
  } else if (name == "thm4") {
    for (const auto& u : cfg.us) {
      if (u.is_zero()) continue;
      detail::require_no_stop(recur_d3(u, Rational(0), cfg.horizon), "(u,v)=(" + u.str() + ",0)");
      ++rep.cases;
    }
    for (const auto& v : cfg.vs) {
      if (v.is_zero()) continue;
      detail::require_no_stop(recur_d3(Rational(0), v, cfg.horizon), "(u,v)=(0," + v.str() + ")");
      ++rep.cases;
    }
  } else if (name == "thm6") {
    for (auto [u, v] : cfg.pairs) {
      if (u.sign() < 0) u = -u;
      const Rational u2 = u * u;
      if (u2 < Rational(6) || v < std::max(Rational(3) * u2 - Rational(1), Rational(2) * u2 + Rational(8)))
        throw InvalidArgument("(" + u.str() + "," + v.str() + ") violates the suite's hypotheses");
      const std::string who = "(u,v)=(" + u.str() + "," + v.str() + ")";
      const CoeffSeq<Rational> s = recur_d3(u, v, cfg.horizon);
      detail::require_no_stop(s, who);
      for (std::size_t k = 0; 3 * k + 3 <= cfg.horizon; ++k) {
        detail::check_range(who, "alpha", 3 * k + 2, s.a(3 * k + 2), Rational(2) * u, Rational(3) * u);
        detail::check_range(who, "alpha", 3 * k + 3, s.a(3 * k + 3), Rational(-2) * u, -u);
        detail::check_range(who, "beta", 3 * k + 1, s.b(3 * k + 1), Rational(-1), Rational(1));
        detail::check_range(who, "beta", 3 * k + 2, s.b(3 * k + 2), u2 - v - Rational(1), u2 - v + Rational(1));
        detail::check_range(who, "beta", 3 * k + 3, s.b(3 * k + 3), v + Rational(2) * u2, v + Rational(6) * u2);
      }
      ++rep.cases;
    }
  } else {
    throw InvalidArgument("unknown suite '" + name + "' (expected thm3, thm4 or thm6)");
  }
  rep.lines.push_back(rep.summary());
  return rep;
}

}  // namespace mahlercf
