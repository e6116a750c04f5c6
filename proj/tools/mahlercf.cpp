// Command-line front end: every subcommand is a thin shell over the library.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mahlercf/mahlercf.hpp"

namespace {

using namespace mahlercf;
using Json = nlohmann::ordered_json;
using RF = RationalFunction;

struct Options {
  int d = 2;
  std::vector<std::string> u;
  std::optional<std::string> v;
  std::size_t terms = 30;
  long N = 12;
  std::string b = "2";
  std::string eps = "1/1000000000000000000000000000000";
  long range = 50;
  std::string format = "json";
  unsigned jobs = default_jobs();
  std::string symbolic;
  std::string suite;
  std::size_t window = 0;
  unsigned k = 0;
};

std::vector<Rational> u_values(const Options& o) {
  std::vector<Rational> out;
  for (const auto& s : o.u) out.push_back(parse_rational(s));
  if (o.v) out.push_back(parse_rational(*o.v));
  return out;
}

MahlerParams<Rational> params_of(const Options& o) { return MahlerParams<Rational>(o.d, u_values(o)); }

// Symbolic parameters: "--symbolic u" (d = 2) or "--symbolic v --u 0" (d = 3).
MahlerParams<RF> symbolic_params(const Options& o) {
  if (o.symbolic == "u") {
    if (o.d != 2) throw InvalidArgument("--symbolic u requires --d 2");
    return MahlerParams<RF>(2, {RF::variable()});
  }
  if (o.symbolic == "v") {
    if (o.d != 3) throw InvalidArgument("--symbolic v requires --d 3");
    if (o.u.size() != 1) throw InvalidArgument("--symbolic v needs exactly one numeric --u");
    return MahlerParams<RF>(3, {RF(parse_rational(o.u[0])), RF::variable()});
  }
  throw InvalidArgument("--symbolic must be 'u' or 'v', got '" + o.symbolic + "'");
}

template <class F>
Json params_json(const MahlerParams<F>& p) {
  Json u = Json::array();
  for (const auto& c : p.u) u.push_back(detail::coeff_string(c));
  return Json{{"d", p.d}, {"u", u}};
}

template <class F>
Json strings(const std::vector<F>& v, std::size_t from = 0) {
  Json out = Json::array();
  for (std::size_t i = from; i < v.size(); ++i) out.push_back(detail::coeff_string(v[i]));
  return out;
}

template <class F>
Json poly_strings(const std::vector<Polynomial<F>>& v, const char* var) {
  Json out = Json::array();
  for (const auto& p : v) out.push_back(p.to_string(var));
  return out;
}

template <class F>
Json expand_json(const MahlerParams<F>& p, std::size_t terms) {
  const RawCF<F> raw = expand_g(p, terms);
  const ModifiedCF<F> m = to_modified(raw);
  Json out{{"params", params_json(p)},
           {"status", to_string(raw.status)},
           {"terms", raw.terms()},
           {"quotients", poly_strings(raw.a, "x")},
           {"a_hat", poly_strings(m.a_hat, "x")},
           {"beta", strings(m.beta, 1)}};
  out["exhausted_at"] = raw.exhausted_at ? Json(*raw.exhausted_at) : Json(nullptr);
  return out;
}

template <class F>
Json classify_json(const Classification<F>& c) {
  Json out{{"verdict", to_string(c.verdict)}, {"index", c.index}, {"params", params_json(c.params)}};
  out["alpha"] = strings(c.terms.alpha, 1);
  out["beta"] = strings(c.terms.beta, 1);
  if (c.badly_approximable()) out["note"] = "verified through horizon " + std::to_string(c.index);
  else out["note"] = "beta_" + std::to_string(c.index) + " = 0: partial quotient " + std::to_string(c.index) +
                     " is not linear";
  return out;
}

int cmd_expand(const Options& o) {
  const Json out = o.symbolic.empty() ? expand_json(params_of(o), o.terms) : expand_json(symbolic_params(o), o.terms);
  std::cout << out.dump() << '\n';
  return 0;
}

int cmd_classify(const Options& o) {
  const Json out = o.symbolic.empty() ? classify_json(classify(params_of(o), o.terms))
                                      : classify_json(classify(symbolic_params(o), o.terms));
  std::cout << out.dump() << '\n';
  return 0;
}

int cmd_hankel(const Options& o) {
  const auto p = params_of(o);
  const long N = o.N;
  const ModifiedCF<Rational> cf = to_modified(expand_g(p, static_cast<std::size_t>(N) + 1));
  const HankelProfile<Rational> prof = hankel_from_cf(cf, N);
  const std::vector<Rational> c = fhat_coeffs(p, static_cast<std::size_t>(2 * N));
  Json H = Json::object();
  Json direct = Json::object();
  bool agree = true;
  for (long n = 1; n <= N; ++n) {
    const Rational h = hankel_det(c, static_cast<std::size_t>(n));
    direct[std::to_string(n)] = h.str();
    const Rational predicted = prof.nonzero(n) ? prof.H.at(n) : Rational(0);
    if (prof.nonzero(n)) H[std::to_string(n)] = predicted.str();
    agree = agree && h == predicted;
  }
  Json out{{"params", params_json(p)}, {"N", N}, {"s", prof.s}, {"H", H}, {"zero_set", prof.zero_set},
           {"direct", direct}, {"agree", agree}};
  if (o.window > 0) {
    const BhwyReport r = bhwy_upper_bound(prof, p.d, o.window);
    out["bhwy"] = Json{{"rho_hat", r.rho_hat.str()}, {"bound", r.bound.str()}, {"window", r.window},
                       {"label", BhwyReport::label}};
  }
  std::cout << out.dump() << '\n';
  if (!agree) throw AssertionFailed("direct Hankel determinants disagree with the continued fraction");
  return 0;
}

int cmd_bound(const Options& o, bool with_approximants) {
  const auto p = params_of(o);
  if (with_approximants) require_nonzero_value(p, mpz_class(o.b));
  const ExponentReport r = lower_bound(p, o.terms);
  Json out{{"params", params_json(p)}, {"horizon", r.horizon}};
  if (r.rational_g) {
    out["verdict"] = "rational";
    out["note"] = "g is a rational function";
  } else if (r.conditional_two) {
    out["verdict"] = "conditional_two";
    out["lower_bound"] = "2";
    out["note"] = "all partial quotients linear through horizon " + std::to_string(r.horizon) +
                  "; exponent 2 only if this persists";
  } else {
    out["verdict"] = "lower_bound";
    out["lower_bound"] = r.lower_bound.str();
    out["n0"] = *r.n0;
    out["c"] = *r.c;
  }
  if (with_approximants && r.n0) {
    Json list = Json::array();
    for (const auto& a : approximants(p, mpz_class(o.b), *r.n0, o.k)) {
      Json e{{"k", a.k}, {"a", a.a.get_str()}, {"b", a.b.get_str()}, {"reduced", a.reduced.str()},
             {"err_lo", to_scientific(a.err.lo, 4, false)}, {"err_hi", to_scientific(a.err.hi, 4, true)}};
      for (const auto& [key, value] : {std::pair{"exponent_lo", a.exponent_lo}, std::pair{"exponent_hi", a.exponent_hi}}) {
        std::ostringstream ex;
        ex.precision(4);
        ex << std::fixed << value;
        e[key] = ex.str();
      }
      list.push_back(e);
    }
    out["b"] = o.b;
    out["approximants"] = list;
  }
  std::cout << out.dump() << '\n';
  return 0;
}

int cmd_eval(const Options& o) {
  const auto p = params_of(o);
  const Rational eps = parse_rational(o.eps);
  if (eps.sign() <= 0) throw InvalidArgument("--eps must be positive");
  const RationalInterval iv = eval_g(p, mpz_class(o.b), eps);
  // Enough digits to resolve the requested width.
  const unsigned digits = static_cast<unsigned>(std::max(1.0, std::ceil(-log_abs(eps) / std::log(10.0)) + 2));
  Json out{{"params", params_json(p)},
           {"b", o.b},
           {"eps", eps.str()},
           {"lo", to_decimal(iv.lo, digits, false)},
           {"hi", to_decimal(iv.hi, digits, true)},
           {"lo_exact", iv.lo.str()},
           {"hi_exact", iv.hi.str()}};
  std::cout << out.dump() << '\n';
  return 0;
}

int cmd_scan(const Options& o) {
  if (o.format != "csv" && o.format != "json") throw InvalidArgument("--format must be csv or json");
  const auto recs = scan_grid(o.range, o.terms, o.jobs);
  if (o.format == "csv") write_csv_header(std::cout);
  std::size_t zero = 0, outside = 0;
  for (const auto& r : recs) {
    if (o.format == "csv") write_csv(std::cout, r);
    else write_jsonl(std::cout, r);
    zero += !r.ok;
    outside += !r.ok && r.family == Family::None;
  }
  std::cerr << "scanned " << recs.size() << " points, " << zero << " beta_zero, " << outside
            << " outside the known families\n";
  return 0;
}

int cmd_verify(const Options& o, bool terms_given) {
  SuiteConfig cfg = default_suite(o.suite);
  if (terms_given) cfg.horizon = o.terms;
  const SuiteReport r = verify_suite(o.suite, cfg);
  std::cout << Json{{"suite", r.name}, {"cases", r.cases}, {"horizon", r.horizon}, {"status", r.summary()}}.dump()
            << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Continued fractions of Mahler functions"};
  app.require_subcommand(1);
  Options o;

  auto add_params = [&](CLI::App* sub) {
    sub->add_option("--d", o.d, "degree d >= 2");
    sub->add_option("--u", o.u, "coefficients u_1..u_(d-1) (repeat or comma-separate)")->delimiter(',');
    sub->add_option("--v", o.v, "shorthand for the second coefficient when d = 3");
  };

  auto* expand = app.add_subcommand("expand", "continued fraction of g");
  add_params(expand);
  expand->add_option("--terms", o.terms, "partial quotients");
  expand->add_option("--symbolic", o.symbolic, "u (d = 2) or v (d = 3, numeric --u)");

  auto* classify_cmd = app.add_subcommand("classify", "vanishing-beta classification (d = 2, 3)");
  add_params(classify_cmd);
  classify_cmd->add_option("--terms", o.terms, "horizon");
  classify_cmd->add_option("--format", o.format, "json")->check(CLI::IsMember({"json"}));
  classify_cmd->add_option("--symbolic", o.symbolic, "u (d = 2) or v (d = 3, numeric --u)");

  auto* hankel = app.add_subcommand("hankel", "Hankel determinants from the continued fraction");
  add_params(hankel);
  hankel->add_option("--N", o.N, "largest order");
  hankel->add_option("--window", o.window, "tail window for the heuristic upper bound");

  auto* bound = app.add_subcommand("bound", "irrationality exponent lower bound");
  add_params(bound);
  bound->add_option("--terms", o.terms, "horizon");
  auto* b_opt = bound->add_option("--b", o.b, "integer argument with |b| >= 2 (enables approximants)");
  bound->add_option("--k", o.k, "largest lift index for approximants");

  auto* eval = app.add_subcommand("eval", "certified enclosure of g(b)");
  add_params(eval);
  eval->add_option("--b", o.b, "integer argument with |b| >= 2");
  eval->add_option("--eps", o.eps, "largest interval width (rational)");

  auto* scan = app.add_subcommand("scan", "integer grid scan for d = 3");
  scan->add_option("--range", o.range, "R: scan [-R, R]^2");
  scan->add_option("--terms", o.terms, "horizon");
  scan->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  scan->add_option("--jobs", o.jobs, "worker threads (default MAHLERCF_JOBS)");

  auto* verify = app.add_subcommand("verify", "finite-horizon theorem suites");
  verify->add_option("--suite", o.suite, "thm3, thm4 or thm6")->required();
  auto* verify_terms = verify->add_option("--terms", o.terms, "override the suite horizon");
  verify->add_option("--jobs", o.jobs, "worker threads (default MAHLERCF_JOBS)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*expand) return cmd_expand(o);
    if (*classify_cmd) return cmd_classify(o);
    if (*hankel) return cmd_hankel(o);
    if (*bound) return cmd_bound(o, b_opt->count() > 0);
    if (*eval) return cmd_eval(o);
    if (*scan) return cmd_scan(o);
    if (*verify) return cmd_verify(o, verify_terms->count() > 0);
  } catch (const AssertionFailed& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return 1;
  }
  return 1;
}
