#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "heunpb/identities.hpp"
#include "test_support.hpp"

using namespace heunpb;
using namespace heunpb::testing;

TEST_CASE("catalog is complete and has unique stable ids") {
  auto cases = catalog();
  CHECK(cases.size() >= 19);
  std::set<std::string> ids;
  for (const auto& c : cases) ids.insert(c.id);
  CHECK(ids.size() == cases.size());
  for (const char* required :
       {"CYC1", "CYC2", "CYC3", "CYC4", "CYC-LOG", "CYC-TRIV", "CYC-KLEIN", "CYC-PSI",
        "REM-POW1", "REM-POW2", "REM-CONTIG", "P1", "POLY-P15", "POLY-P19", "POLY-P20",
        "DIH-THETA-SMALL", "DIH-CHEB", "DIH-THETA1", "DIH-THETA2", "DIH-N1", "DIH-EVAL1",
        "DIH-EVAL2", "DIH-EVAL3", "DIH-EVAL4", "DIH-EVAL5"})
    CHECK(ids.count(required) == 1);
}

TEST_CASE("CYC1 at (a,b) = (1,1) terminates at 1 - w/2 on both sides") {
  // lhs: Hl(2; -2; 1, -1; 2; -1) in w = 1 - x
  auto s = heun_series(HeunParamsQ{q(2), q(-2), q(1), q(-1), q(2), q(-1)}, 6);
  CHECK(s.terminated);
  CHECK(series_poly(s) == Poly(std::vector<Rational>{q(1), q(-1, 2)}));
  // rhs: ((x+1)/2)^1 at x = 1 - w is also 1 - w/2
  PowerProduct pp;
  pp.mul(Poly::linear(q(1), q(-1, 2)), q(1));
  CHECK(pp_expand_integer(pp) == series_poly(s));
}

TEST_CASE("DIH-THETA1 at (N,M) = (1,2) is the binomial-split polynomial") {
  auto r = check_dihedral_theta(1, 2, 1, q(0));
  CHECK(r.ok);
  auto r2 = check_dihedral_theta(1, 2, 2, q(0));
  CHECK(r2.ok);
}

TEST_CASE("POLY-P15 at n = 1, a = 1/2 expands to the same cubic") {
  auto r = check_poly_p15(1, q(1, 2), q(-9, 8));
  CHECK(r.ok);
}

TEST_CASE("run_identity: single case, pass line") {
  auto report = run_identity("CYC1", RunPlan::quick(0));
  CHECK(report.pass);
  CHECK(report.id == "CYC1");
  CHECK(report.mode == "numeric");
  CHECK(report.samples == 15);  // 3 bindings x 5 points
  CHECK(report.witness.empty());

  CHECK_THROWS_AS(run_identity("NOPE", RunPlan::quick(0)), std::invalid_argument);
}

TEST_CASE("mutation sensitivity: corrupted qhat1 fails with a witness") {
  long n = 2;
  Rational a(2, 5);
  Rational good = q(9 * n) * a + q(18 * n * n - 6 * n);
  Rational bad = q(9 * n) * a + q(18 * n * n - 5 * n);
  CHECK(check_poly_p19(n, a, good).ok);
  auto r = check_poly_p19(n, a, bad);
  CHECK(!r.ok);
  CHECK(!r.witness.empty());
}

TEST_CASE("quick profile: every case passes deterministically") {
  auto first = run_all(RunPlan::quick(7));
  auto second = run_all(RunPlan::quick(7));
  REQUIRE(first.size() == second.size());
  CHECK(first.size() >= 19);
  for (size_t i = 0; i < first.size(); ++i) {
    CAPTURE(first[i].id);
    CAPTURE(first[i].witness);
    CHECK(first[i].pass);
    CHECK(first[i].id == second[i].id);
    CHECK(first[i].worst_error == second[i].worst_error);
    CHECK(first[i].samples == second[i].samples);
    // reports come back ordered by id
    if (i > 0) CHECK(first[i - 1].id < first[i].id);
  }
}

TEST_CASE("logarithmic degeneration limit at alpha = 1e-6") {
  auto r = check_cyc_log_limit(1, 1);
  CHECK(r.ok);
  auto r2 = check_cyc_log_limit(2, 1);
  CHECK(r2.ok);
}

TEST_CASE("secondary pass: sample points perturbed by 1e-3 i") {
  Precision guard(50);
  BigFloat eps(1e-3);

  // CYC1 with (a, b) = (1/2, 1/3)
  {
    Rational a(1, 2), b(1, 3);
    HeunParamsQ p{(a + b) / a, -b * (a + q(1)), a, -b, q(1) + a, q(-1)};
    PowerProduct pp;
    pp.mul(Poly::linear(q(1), -a / (a + b)), b);
    for (Rational w : {q(1, 10), q(2, 5), q(3, 5)}) {
      CFloat wz(w.to_float(), eps);
      CHECK(rel_err(heun_eval(p, wz).value, pp.eval(wz)) < 1e-10);
    }
  }

  // P1 with (a, b, c) = (1/3, 1/5, 3/4)
  {
    Rational a(1, 3), b(1, 5), c(3, 4);
    HeunParamsQ p{q(-1), q(0), q(2) * a, q(2) * b, q(2) * c - q(1), a + b - c + q(1)};
    for (Rational x : {q(1, 4), q(1, 2)}) {
      CFloat xz(x.to_float(), eps);
      CHECK(rel_err(heun_eval(p, xz).value, hpg_eval(HpgParamsQ{a, b, c}, xz * xz).value) <
            1e-10);
    }
  }

  // DIH-EVAL1 with (a, b) = (1/3, 3/4): u = principal sqrt of the perturbed x
  {
    Rational a(1, 3), b(3, 4);
    HeunParamsQ p{(b * b) / (a * a), -b * (a + b) / (q(4) * a), (a + b) / q(2),
                  (a + b + q(1)) / q(2), q(-1, 2), q(1) + a};
    PowerProduct plus, minus;
    plus.mul(poly({1, 1}), -a);
    plus.mul(Poly::linear(q(1), -(a / b)), -b);
    minus.mul(poly({1, -1}), -a);
    minus.mul(Poly::linear(q(1), a / b), -b);
    for (Rational x : {q(1, 5), q(2, 5)}) {
      CFloat u = sqrt(CFloat(x.to_float(), eps));
      CFloat rhs = (plus.eval(u) + minus.eval(u)) / CFloat(2L);
      CHECK(rel_err(heun_eval(p, CFloat(x.to_float(), eps)).value, rhs) < 1e-10);
    }
  }
}
