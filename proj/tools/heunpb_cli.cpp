// heunpb: coverings, pull-backs, Heun/2F1 evaluation, and the identity
// verification suite from the command line.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parameter error,
// 3 numeric-domain error (pole, branch cut, convergence policy).

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "heunpb/covering.hpp"
#include "heunpb/identities.hpp"
#include "heunpb/json_io.hpp"
#include "heunpb/pullback.hpp"
#include "heunpb/series.hpp"

using namespace heunpb;

namespace {

struct Options {
  long precision = 50;
  std::uint64_t seed = 0;
  std::string profile = "quick";
  std::string output = "json";
};

// a CLI number: exact rational ("3", "-5/7") or decimal ("0.25", "1e-3")
struct NumberArg {
  bool exact = true;
  Rational r;
  BigFloat f;

  CFloat value() const { return exact ? CFloat(r.to_float()) : CFloat(f); }
};

NumberArg parse_number(const std::string& s) {
  NumberArg n;
  if (s.find_first_of(".eE") == std::string::npos) {
    n.r = Rational::parse(s);
    return n;
  }
  n.exact = false;
  n.f = BigFloat::parse(s);
  return n;
}

Rational parse_exact(const std::string& s, const char* what) {
  NumberArg n = parse_number(s);
  if (!n.exact)
    throw std::invalid_argument(std::string(what) + ": exact mode requires a rational value, got '" +
                                s + "'");
  return n.r;
}

long parse_long(const std::string& s, const char* what) {
  if (s.empty()) throw std::invalid_argument(std::string("missing required value --") + what);
  Rational r = parse_exact(s, what);
  if (!r.is_integer()) throw std::invalid_argument(std::string(what) + ": expected an integer");
  return r.to_long();
}

void emit(const Json& j, const Options& opt) {
  if (opt.output == "pretty")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << j.dump() << "\n";
}

int cmd_covering(const std::string& family, const std::vector<std::string>& args,
                 const Options& opt) {
  if (family == "cyclic" || family == "dihedral") {
    if (args.size() != 2)
      throw std::invalid_argument(family + " covering needs two positive integers N M");
    long N = parse_long(args[0], "N"), M = parse_long(args[1], "M");
    if (family == "cyclic") {
      emit(covering_json(cyclic_covering(N, M)), opt);
    } else {
      auto [cov, pair] = dihedral_covering(N, M);
      emit(covering_json(cov, &pair), opt);
    }
    return 0;
  }
  if (family == "nonbelyi") {
    if (args.size() != 1) throw std::invalid_argument("nonbelyi covering needs one rational s");
    emit(covering_json(nonbelyi_covering(parse_exact(args[0], "s"))), opt);
    return 0;
  }
  throw std::invalid_argument("unknown covering family '" + family +
                              "' (expected cyclic, dihedral, or nonbelyi)");
}

int cmd_verify(const std::string& id, const Options& opt) {
  RunPlan plan = opt.profile == "full" ? RunPlan::full(opt.seed) : RunPlan::quick(opt.seed);
  plan.digits = opt.precision;
  std::vector<VerificationReport> reports;
  if (id == "all")
    reports = run_all(plan);
  else
    reports.push_back(run_identity(id, plan));

  long passed = 0;
  std::string first_fail;
  for (const auto& r : reports) {
    if (r.pass)
      ++passed;
    else if (first_fail.empty())
      first_fail = r.id;
  }

  if (opt.output == "csv") {
    std::cout << report_csv_header() << "\n";
    for (const auto& r : reports) std::cout << report_csv_row(r) << "\n";
  } else if (opt.output == "pretty") {
    for (const auto& r : reports) {
      std::printf("%-16s %-17s %-4s samples=%-5ld %-10s %8.1fms  %s\n", r.id.c_str(),
                  r.mode.c_str(), r.pass ? "pass" : "FAIL", r.samples,
                  r.worst_error.empty() ? "exact" : r.worst_error.c_str(), r.ms,
                  r.witness.c_str());
    }
    std::printf("summary: %ld/%zu passed (profile=%s, seed=%llu)\n", passed, reports.size(),
                plan.profile.c_str(), static_cast<unsigned long long>(plan.seed));
  } else {
    for (const auto& r : reports) std::cout << report_json(r).dump() << "\n";
    Json summary{{"summary",
                  Json{{"total", reports.size()},
                       {"passed", passed},
                       {"profile", plan.profile},
                       {"seed", plan.seed}}}};
    std::cout << summary.dump() << "\n";
  }

  if (!first_fail.empty()) {
    std::cerr << "verification failed: " << first_fail << "\n";
    return 1;
  }
  return 0;
}

int cmd_eval(const std::string& function, const std::map<std::string, std::string>& vals,
             const Options& opt) {
  Precision guard(opt.precision);
  auto need = [&](const char* key) -> NumberArg {
    auto it = vals.find(key);
    if (it == vals.end())
      throw std::invalid_argument(std::string("eval ") + function + " requires --" + key);
    return parse_number(it->second);
  };
  CFloat x = need("x").value();

  EvalResult res;
  if (function == "heun") {
    NumberArg t = need("t"), qq = need("q"), a = need("a"), b = need("b"), c = need("c"),
              d = need("d");
    if (t.exact && qq.exact && a.exact && b.exact && c.exact && d.exact)
      res = heun_eval(HeunParamsQ{t.r, qq.r, a.r, b.r, c.r, d.r}, x);
    else
      res = heun_eval(HeunParams<CFloat>{t.value(), qq.value(), a.value(), b.value(), c.value(),
                                         d.value()},
                      x);
  } else if (function == "2f1") {
    NumberArg A = need("A"), B = need("B"), C = need("C");
    if (A.exact && B.exact && C.exact)
      res = hpg_eval(HpgParamsQ{A.r, B.r, C.r}, x);
    else
      res = hpg_eval(HpgParams<CFloat>{A.value(), B.value(), C.value()}, x);
  } else if (function == "closed") {
    auto it = vals.find("form");
    if (it == vals.end()) throw std::invalid_argument("eval closed requires --form");
    NumberArg a = need("a");
    CFloat v;
    if (it->second == "degenerate") {
      v = a.exact ? hpg_degenerate_closed(a.r, x) : hpg_degenerate_closed(a.f, x);
    } else if (it->second == "dihedral-upper" || it->second == "dihedral-half") {
      if (!a.exact) throw std::invalid_argument("dihedral closed forms take a rational --a");
      v = hpg_dihedral_closed(it->second == "dihedral-upper" ? DihedralVariant::upper
                                                             : DihedralVariant::half,
                              a.r, x);
    } else {
      throw std::invalid_argument("unknown closed form '" + it->second + "'");
    }
    res = {v, BigFloat(0L), 1};
  } else {
    throw std::invalid_argument("unknown function '" + function +
                                "' (expected heun, 2f1, or closed)");
  }

  if (opt.output == "pretty") {
    std::cout << res.value.str() << "  (error estimate " << res.error_estimate.str(3)
              << ", terms " << res.terms << ")\n";
  } else {
    emit(Json{{"value", res.value.str()},
              {"error_estimate", res.error_estimate.str(3)},
              {"terms", res.terms}},
         opt);
  }
  return 0;
}

int cmd_pullback(const std::string& scenario, const std::map<std::string, std::string>& vals,
                 const Options& opt) {
  auto need = [&](const char* key) -> Rational {
    auto it = vals.find(key);
    if (it == vals.end())
      throw std::invalid_argument("pullback scenario " + scenario + " requires --" + key);
    return parse_exact(it->second, key);
  };
  auto need_long = [&](const char* key) -> long {
    auto it = vals.find(key);
    if (it == vals.end())
      throw std::invalid_argument("pullback scenario " + scenario + " requires --" + key);
    return parse_long(it->second, key);
  };

  ODE source;
  RationalFunction phi;
  PowerProduct theta;
  bool match = false;

  if (scenario == "P1") {
    Rational A = need("A"), B = need("B"), C = need("C");
    source = hpg_ode({A, B, C});
    phi = RationalFunction(Poly::monomial(Rational(1), 2));
    match = check_p1_equation(A, B, C).ok;
  } else if (scenario == "TRIVPBF") {
    long N = need_long("N"), M = need_long("M");
    Rational alpha = need("alpha");
    Covering cov = cyclic_covering(N, M);
    source = hpg_ode({Rational(1) - alpha, Rational(1), Rational(2)});
    phi = cov.phi;
    theta.mul(cov.phi.num(), Rational(1));
    theta.mul(Poly::x(), Rational(-2));
    theta.mul(Poly(Rational(2 * M, N * (N + M))), Rational(1));
    match = check_trivpbf_equation(N, M, alpha).ok;
  } else if (scenario == "NONBELYI") {
    Rational s = need("s"), e = need("e");
    source = hpg_ode({e / Rational(2), (e + Rational(1)) / Rational(2), Rational(1) + e});
    phi = nonbelyi_covering(s).phi;
    theta.mul(Poly(std::vector<Rational>{s, Rational(2), Rational(-1)}), -e);
    theta.mul(Poly(s), e);
    match = check_nonbelyi_equation(s, e).ok;
  } else if (scenario == "DIHEDRAL-DIFF") {
    long N = need_long("N"), M = need_long("M");
    Rational alpha = need("alpha");
    RationalFunction base = dihedral_covering(N, M).first.phi;
    phi = base / (base - RationalFunction(1));
    source = hpg_ode({alpha / Rational(2), -alpha / Rational(2), Rational(1, 2)});
    ODE pulled = transform_ode({source, phi, theta});
    std::vector<Rational> want{Rational(1, 2), Rational(3, 2), Rational(N) * alpha,
                               Rational(M) * alpha};
    std::sort(want.begin(), want.end());
    match = exponent_difference_multiset(pulled) == want;
  } else {
    throw std::invalid_argument("unknown scenario '" + scenario +
                                "' (expected P1, TRIVPBF, NONBELYI, or DIHEDRAL-DIFF)");
  }

  ODE result = transform_ode({source, phi, theta});
  emit(pullback_report_json(scenario, source, phi, theta, result, match,
                            exponent_difference_multiset(result)),
       opt);
  return match ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pull-back coverings of hypergeometric equations to Heun equations and their "
               "Liouvillian-solution identities"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--precision", opt.precision, "working precision in decimal digits (>= 15)")
      ->check(CLI::Range(15L, 100000L));
  app.add_option("--seed", opt.seed, "seed for the deterministic sampler");
  app.add_option("--profile", opt.profile, "verification profile")
      ->check(CLI::IsMember({"quick", "full"}));
  app.add_option("--output", opt.output, "output format")
      ->check(CLI::IsMember({"json", "csv", "pretty"}));

  auto* covering_cmd = app.add_subcommand("covering", "construct a covering family member");
  covering_cmd->fallthrough();
  std::string family;
  std::vector<std::string> covering_args;
  covering_cmd->add_option("family", family, "cyclic | dihedral | nonbelyi")->required();
  covering_cmd->add_option("args", covering_args, "N M for cyclic/dihedral, s for nonbelyi");

  auto* verify_cmd = app.add_subcommand("verify", "run identity verification cases");
  verify_cmd->fallthrough();
  std::string verify_id;
  verify_cmd->add_option("id", verify_id, "identity id or 'all'")->required();

  auto* eval_cmd = app.add_subcommand("eval", "evaluate a local Heun/2F1 function or closed form");
  eval_cmd->fallthrough();
  std::string eval_fn;
  eval_cmd->add_option("function", eval_fn, "heun | 2f1 | closed")->required();
  std::map<std::string, std::string> eval_vals;
  for (const char* key : {"t", "q", "a", "b", "c", "d", "A", "B", "C", "x", "form"}) {
    eval_cmd->add_option_function<std::string>(
        std::string("--") + key,
        [&eval_vals, key](const std::string& v) { eval_vals[key] = v; });
  }

  auto* pullback_cmd = app.add_subcommand("pullback", "run a named pull-back scenario");
  pullback_cmd->fallthrough();
  std::string scenario;
  pullback_cmd->add_option("--scenario", scenario, "P1 | TRIVPBF | NONBELYI | DIHEDRAL-DIFF")
      ->required();
  std::map<std::string, std::string> pb_vals;
  for (const char* key : {"A", "B", "C", "N", "M", "alpha", "s", "e"}) {
    pullback_cmd->add_option_function<std::string>(
        std::string("--") + key, [&pb_vals, key](const std::string& v) { pb_vals[key] = v; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (covering_cmd->parsed()) return cmd_covering(family, covering_args, opt);
    if (verify_cmd->parsed()) return cmd_verify(verify_id, opt);
    if (eval_cmd->parsed()) return cmd_eval(eval_fn, eval_vals, opt);
    if (pullback_cmd->parsed()) return cmd_pullback(scenario, pb_vals, opt);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const numeric_error& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
