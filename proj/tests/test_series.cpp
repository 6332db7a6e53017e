#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "heunpb/pullback.hpp"
#include "heunpb/series.hpp"
#include "test_support.hpp"

using namespace heunpb;
using namespace heunpb::testing;

TEST_CASE("2F1 series examples") {
  // (-1, 1, 2): terminates at 1 - z/2
  auto s = hpg_series(HpgParamsQ{q(-1), q(1), q(2)}, 6);
  CHECK(s.terminated);
  CHECK(series_poly(s) == Poly(std::vector<Rational>{q(1), q(-1, 2)}));

  // (1, 3/2, 1/2): coefficient k is 2k+1
  auto s2 = hpg_series(HpgParamsQ{q(1), q(3, 2), q(1, 2)}, 8);
  for (int k = 0; k <= 8; ++k) CHECK(s2.coeff[static_cast<size_t>(k)] == q(2 * k + 1));

  // A = 0: constant 1
  auto s3 = hpg_series(HpgParamsQ{q(0), q(5, 7), q(3, 2)}, 5);
  CHECK(s3.terminated);
  CHECK(series_poly(s3) == Poly(q(1)));

  CHECK_THROWS_AS(hpg_series(HpgParamsQ{q(1), q(1), q(-2)}, 3), std::invalid_argument);
  // negative non-integer C is admissible
  CHECK_NOTHROW(hpg_series(HpgParamsQ{q(1), q(1), q(-1, 2)}, 3));
}

TEST_CASE("Heun series examples") {
  // Theta1 parameters for (N,M) = (1,2): terminates at 1 - 3x/4
  auto s = heun_series(HeunParamsQ{q(4), q(3, 2), q(-3, 2), q(-1), q(-1, 2), q(0)}, 8);
  CHECK(s.terminated);
  CHECK(series_poly(s) == Poly(std::vector<Rational>{q(1), q(-3, 4)}));

  // cyclic closed form with a = b = 1 at argument 1-x: 1 - x/2
  auto s2 = heun_series(HeunParamsQ{q(2), q(-2), q(1), q(-1), q(2), q(-1)}, 8);
  CHECK(s2.terminated);
  CHECK(series_poly(s2) == Poly(std::vector<Rational>{q(1), q(-1, 2)}));

  // a = 0 and q = 0: the equation annihilates constants
  auto s3 = heun_series(HeunParamsQ{q(3), q(0), q(0), q(5, 3), q(2), q(1)}, 8);
  CHECK(s3.terminated);
  CHECK(series_poly(s3) == Poly(q(1)));

  CHECK_THROWS_AS(heun_series(HeunParamsQ{q(1), q(0), q(1), q(1), q(1), q(1)}, 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(heun_series(HeunParamsQ{q(0), q(0), q(1), q(1), q(1), q(1)}, 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(heun_series(HeunParamsQ{q(2), q(0), q(1), q(1), q(-3), q(1)}, 3),
                  std::invalid_argument);
}

TEST_CASE("eval_truncated") {
  Precision guard(50);
  auto s = heun_series(HeunParamsQ{q(4), q(3, 2), q(-3, 2), q(-1), q(-1, 2), q(0)}, 8);

  auto r = eval_truncated(s, CFloat(q(1, 10).to_float()), BigFloat(1L));
  CHECK(abs(r.value - CFloat(q(925, 1000).to_float())).to_double() < 1e-40);

  auto r0 = eval_truncated(s, CFloat(0L), BigFloat(1L));
  CHECK(r0.value == CFloat(1L));

  // policy boundary: |x| >= 0.9 * min(1, t)
  auto tiny_t = heun_series(HeunParamsQ{q(1, 4), q(1), q(1), q(1), q(1), q(1)}, 64);
  CHECK_THROWS_AS(eval_truncated(tiny_t, CFloat(BigFloat(0.5)), BigFloat(0.25)),
                  outside_disc_error);

  // too few terms of a non-terminating series
  auto slow = hpg_series(HpgParamsQ{q(1, 3), q(1, 5), q(1, 2)}, 5);
  CHECK_THROWS_AS(eval_truncated(slow, CFloat(BigFloat(0.85)), BigFloat(1L)), convergence_error);

  // adaptive wrapper pushes the order until convergence
  HpgParamsQ p{q(1, 3), q(1, 5), q(1, 2)};
  auto far = hpg_eval(p, CFloat(BigFloat(0.85)));
  auto direct = eval_truncated(hpg_series(p, 2000), CFloat(BigFloat(0.85)), BigFloat(1L));
  CHECK(rel_err(far.value, direct.value) < 1e-45);
}

TEST_CASE("degenerate closed form") {
  Precision guard(50);
  // a=2, z=1/2 -> 3/4
  CHECK(rel_err(hpg_degenerate_closed(q(2), CFloat(BigFloat(0.5))), CFloat(BigFloat(0.75))) <
        1e-45);
  // a=0, z=1/2 -> 2 log 2
  CFloat two_log2 = CFloat(BigFloat(2L) * log(BigFloat(2L)));
  CHECK(rel_err(hpg_degenerate_closed(q(0), CFloat(BigFloat(0.5))), two_log2) < 1e-45);
  // a=1: identically 1
  CHECK(rel_err(hpg_degenerate_closed(q(1), CFloat(BigFloat(0.37))), CFloat(1L)) < 1e-45);
  // z=0 returns the limit value
  CHECK(hpg_degenerate_closed(q(2, 3), CFloat(0L)) == CFloat(1L));
  // cut [1, inf)
  CHECK_THROWS_AS(hpg_degenerate_closed(q(1, 2), CFloat(BigFloat(1.5))), branch_error);
}

TEST_CASE("degenerate closed form agrees with the 2F1 series") {
  Precision guard(50);
  SplitMix64 rng(11);
  int done = 0;
  while (done < 20) {
    Rational a = random_rational(rng, 3, 7);
    if (a.is_zero() || a.abs() >= q(3)) continue;
    Rational z = random_in(rng, q(1, 100), q(4, 5));
    CFloat zx(z.to_float());
    // 2F1(1-a, 1; 2; z)
    auto lhs = hpg_eval(HpgParamsQ{q(1) - a, q(1), q(2)}, zx);
    CFloat rhs = hpg_degenerate_closed(a, zx);
    CHECK(rel_err(lhs.value, rhs) < 1e-12);
    ++done;
  }
}

TEST_CASE("degenerate closed form: a -> 0 limit") {
  Precision guard(50);
  Rational a(1, 1000000);
  for (long i = 1; i <= 6; ++i) {
    CFloat z(BigFloat(0.12 * static_cast<double>(i)));
    CFloat with_a = hpg_degenerate_closed(a, z);
    CFloat log_form = hpg_degenerate_closed(q(0), z);
    CHECK(rel_err(with_a, log_form) < 1e-4);
  }
  // floating dispatch threshold
  CFloat z(BigFloat(0.3));
  CHECK(rel_err(hpg_degenerate_closed(pow10(-40), z), hpg_degenerate_closed(q(0), z)) == 0.0);
}

TEST_CASE("dihedral closed forms") {
  Precision guard(50);
  CHECK(hpg_dihedral_closed(DihedralVariant::upper, q(5, 7), CFloat(0L)) == CFloat(1L));
  CHECK(hpg_dihedral_closed(DihedralVariant::half, q(-13, 9), CFloat(0L)) == CFloat(1L));
  // half, a=-2, z=1/4: ((1/2)^2 + (3/2)^2)/2 = 5/4
  CHECK(rel_err(hpg_dihedral_closed(DihedralVariant::half, q(-2), CFloat(BigFloat(0.25))),
                CFloat(BigFloat(1.25))) < 1e-45);
  // branch-cut proximity
  CHECK_THROWS_AS(hpg_dihedral_closed(DihedralVariant::half, q(1, 2), CFloat(BigFloat(-0.5))),
                  branch_error);
}

TEST_CASE("dihedral closed form agrees with the 2F1 series") {
  Precision guard(50);
  SplitMix64 rng(12);
  int done = 0;
  while (done < 20) {
    Rational a = random_rational(rng, 2, 9);
    if (a.is_zero()) continue;
    // A = a/2, B = (a+1)/2, C = 1/2
    Rational z = random_in(rng, q(1, 100), q(4, 5));
    CFloat zx(z.to_float());
    auto lhs = hpg_eval(HpgParamsQ{a / q(2), (a + q(1)) / q(2), q(1, 2)}, zx);
    CFloat rhs = hpg_dihedral_closed(DihedralVariant::half, a, zx);
    CHECK(rel_err(lhs.value, rhs) < 1e-12);
    ++done;
  }
}

TEST_CASE("series_ode_residual examples") {
  HeunParamsQ theta1{q(4), q(3, 2), q(-3, 2), q(-1), q(-1, 2), q(0)};
  auto s = heun_series(theta1, 12);
  CHECK(series_ode_residual(s, heun_ode(theta1), 10));

  // wrong function: 1 + x
  TruncatedSeries<Rational> wrong;
  wrong.coeff = {q(1), q(1)};
  wrong.coeff.resize(13, q(0));
  wrong.terminated = true;
  CHECK(!series_ode_residual(wrong, heun_ode(theta1), 10));

  CHECK_THROWS_AS(series_ode_residual(s, heun_ode(theta1), 11), std::invalid_argument);
}

TEST_CASE("heun series satisfies its equation for random admissible parameters") {
  SplitMix64 rng(4242);
  int done = 0;
  while (done < 25) {
    HeunParamsQ p{random_rational(rng, 3, 5), random_rational(rng, 2, 5),
                  random_rational(rng, 2, 5), random_rational(rng, 2, 5),
                  random_rational(rng, 2, 5), random_rational(rng, 2, 5)};
    if (p.t.is_zero() || p.t.is_one()) continue;
    if (p.c.is_nonpositive_integer()) continue;
    int k = 30;
    auto s = heun_series(p, k + 2);
    CHECK(series_ode_residual(s, heun_ode(p), k));
    ++done;
  }
}

TEST_CASE("2F1 with A = -n terminates at degree <= n") {
  SplitMix64 rng(77);
  for (long n = 0; n <= 6; ++n) {
    Rational B = random_rational(rng, 3, 4), C = random_rational(rng, 3, 4);
    if (C.is_nonpositive_integer()) C = q(1, 2);
    auto s = hpg_series(HpgParamsQ{q(-n), B, C}, static_cast<int>(n) + 5);
    CHECK(s.terminated);
    CHECK(series_poly(s).degree() <= static_cast<int>(n));
  }
}
