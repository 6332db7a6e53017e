#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "heunpb/covering.hpp"
#include "heunpb/pullback.hpp"
#include "test_support.hpp"

using namespace heunpb;
using namespace heunpb::testing;

namespace {

// theta for the cyclic pull-back identity: 2M phi / (N D x^2)
PowerProduct cyclic_theta(const Covering& c, long N, long M) {
  PowerProduct theta;
  theta.mul(c.phi.num(), q(1));
  theta.mul(Poly::x(), q(-2));
  theta.mul(Poly(Rational(2 * M, N * (N + M))), q(1));
  return theta;
}

// the dihedral covering with fibers relabeled so both half-integer fibers
// sit over {0, 1}: psi = phi/(phi - 1)
RationalFunction dihedral_relabeled(long N, long M) {
  RationalFunction phi = dihedral_covering(N, M).first.phi;
  return phi / (phi - RationalFunction(1));
}

// member of E(1/2,1/2,alpha) with exponents {0,1/2} at z=0 and z=1
HpgParamsQ dihedral_source(const Rational& alpha) {
  return {alpha / q(2), -alpha / q(2), q(1, 2)};
}

}  // namespace

TEST_CASE("hpg_ode") {
  // A = 0 kills p0
  CHECK(hpg_ode({q(0), q(2, 3), q(1, 2)}).p0.is_zero());

  ODE e = hpg_ode({q(1, 3), q(1, 5), q(1, 2)});
  CHECK(e.p1 == RationalFunction(Poly(q(1, 2)), Poly::x()) +
                    RationalFunction(Poly(q(31, 30)), poly({-1, 1})));
  CHECK(e.p0 == RationalFunction(Poly(q(1, 15)), poly({0, -1, 1})));

  // exponents at z = 0 are {0, 1 - C}
  auto [lo, hi] = local_exponents(e, q(0));
  CHECK(lo == q(0));
  CHECK(hi == q(1, 2));
}

TEST_CASE("heun_ode") {
  HeunParamsQ p{q(3, 2), q(1, 7), q(1, 3), q(1, 5), q(1, 2), q(2, 3)};
  ODE e = heun_ode(p);

  // exponents at 0, 1, t, infinity per the Riemann scheme
  auto [a0, b0] = local_exponents(e, q(0));
  CHECK(a0 == q(0));
  CHECK(b0 == q(1) - p.c);
  auto [a1, b1] = local_exponents(e, q(1));
  CHECK(a1 == std::min(q(0), q(1) - p.d));
  CHECK(b1 == std::max(q(0), q(1) - p.d));
  auto [at, bt] = local_exponents(e, p.t);
  CHECK(at == q(0));
  CHECK(bt == p.c + p.d - p.a - p.b);
  auto [ai, bi] = local_exponents_at_infinity(e);
  CHECK(ai == p.b);
  CHECK(bi == p.a);

  // a = 0 and q = 0 kill p0
  CHECK(heun_ode({q(2), q(0), q(0), q(1, 5), q(1), q(1)}).p0.is_zero());
  CHECK_THROWS_AS(heun_ode({q(1), q(0), q(1), q(1), q(1), q(1)}), std::invalid_argument);
}

TEST_CASE("transform: quadratic P1") {
  Rational A(1, 3), B(1, 5), C(1, 2);
  ODE src = hpg_ode({A, B, C});
  ODE got = transform_ode({src, RationalFunction(poly({0, 0, 1})), PowerProduct::one()});
  HeunParamsQ expect{q(-1), q(0), q(2) * A, q(2) * B, q(2) * C - q(1), A + B - C + q(1)};
  auto m = match_heun(got, expect);
  CHECK(m.match);

  // perturbing q produces a mismatch with a witness
  HeunParamsQ wrong = expect;
  wrong.q = q(1);
  auto bad = match_heun(got, wrong);
  CHECK(!bad.match);
  CHECK(!bad.detail.empty());
  // with C = 1/2 the target has c = 0 and the accessory parameter vanishes,
  // so x = 0 is an ordinary point of the transformed equation
  CHECK(bad.singular_points == std::vector<Rational>{q(-1), q(1)});
}

TEST_CASE("transform: non-Belyi family tuple") {
  Rational e(1, 3), s(1, 2);
  ODE src = hpg_ode({e / q(2), (e + q(1)) / q(2), q(1) + e});
  RationalFunction phi = nonbelyi_covering(s).phi;
  // theta = (1 + (2x - x^2)/s)^(-e) = ((s + 2x - x^2)/s)^(-e)
  PowerProduct theta;
  theta.mul(Poly(std::vector<Rational>{s, q(2), q(-1)}), -e);
  theta.mul(Poly(s), e);
  ODE got = transform_ode({src, phi, theta});
  CHECK(match_heun(got, {q(2), q(0), q(0), q(2) * e, q(1) + e, q(-1)}).match);
}

TEST_CASE("transform: cyclic pull-back of the degenerate family") {
  long N = 2, M = 1, D = N + M;
  Rational alpha(1, 5);
  Covering cov = cyclic_covering(N, M);
  ODE src = hpg_ode({q(1) - alpha, q(1), q(2)});
  ODE got = transform_ode({src, cov.phi, cyclic_theta(cov, N, M)});
  HeunParamsQ expect{Rational(-M, N), q(2) * (q(1) - Rational(M, N)), q(2),
                     q(2) - Rational(D) * alpha, q(3), q(1) - Rational(N) * alpha};
  CHECK(match_heun(got, expect).match);

  // exponent differences of the pulled-back equation: {2, N a, M a, D a}
  std::vector<Rational> want{q(2), Rational(N) * alpha, Rational(M) * alpha, Rational(D) * alpha};
  std::sort(want.begin(), want.end());
  CHECK(exponent_difference_multiset(got) == want);
}

TEST_CASE("transform: identity and composition properties") {
  ODE src = hpg_ode({q(1, 3), q(1, 5), q(1, 2)});
  CHECK(transform_ode({src, RationalFunction::x(), PowerProduct::one()}) == src);

  // pulling back along g then h equals pulling back along g(h)
  RationalFunction g(poly({1, 0, 1}), poly({2, 1}));
  RationalFunction h(poly({0, 3, -1}));
  ODE two_step = transform_ode({transform_ode({src, g, PowerProduct::one()}), h,
                                PowerProduct::one()});
  ODE one_step = transform_ode({src, compose(g, h), PowerProduct::one()});
  CHECK(two_step == one_step);

  CHECK_THROWS_AS(transform_ode({src, RationalFunction(3), PowerProduct::one()}),
                  std::invalid_argument);
}

TEST_CASE("local exponents: ordinary, irregular, and pulled-back points") {
  ODE e = hpg_ode({q(1, 3), q(1, 5), q(1, 2)});
  auto [lo, hi] = local_exponents(e, q(1, 2));  // ordinary point
  CHECK(lo == q(0));
  CHECK(hi == q(1));

  // irregular singularity: p1 with a double pole
  ODE irr{RationalFunction(Poly(q(1)), poly({0, 0, 1})), RationalFunction(0)};
  CHECK_THROWS_AS(local_exponents(irr, q(0)), numeric_error);

  // dihedral pull-back is regular at a root of Theta2: (N,M) = (2,3) has
  // Theta2 of degree 1
  auto [cov, pair] = dihedral_covering(2, 3);
  REQUIRE(pair.Theta2.degree() == 1);
  Rational root = -pair.Theta2.coeff(0) / pair.Theta2.coeff(1);
  ODE pulled = transform_ode(
      {hpg_ode(dihedral_source(q(1, 7))), dihedral_relabeled(2, 3), PowerProduct::one()});
  auto [rlo, rhi] = local_exponents(pulled, root);
  CHECK(rlo == q(0));
  CHECK(rhi == q(1));
}

TEST_CASE("dihedral pull-back: exponent differences on a sample") {
  for (auto [N, M] : {std::pair<long, long>{1, 2}, {2, 3}, {1, 4}}) {
    for (Rational alpha : {q(1, 5), q(1, 7), q(2, 9)}) {
      ODE pulled = transform_ode(
          {hpg_ode(dihedral_source(alpha)), dihedral_relabeled(N, M), PowerProduct::one()});
      std::vector<Rational> want{q(1, 2), q(3, 2), Rational(N) * alpha, Rational(M) * alpha};
      std::sort(want.begin(), want.end());
      CHECK(exponent_difference_multiset(pulled) == want);
      std::vector<Rational> sing{q(0), q(1), Rational(M * M, N * N)};
      std::sort(sing.begin(), sing.end());
      CHECK(singular_support(pulled) == sing);
    }
  }
}

TEST_CASE("exponent differences of a Heun equation match the scheme formulas") {
  // parameters chosen so none of the four points degenerates to ordinary
  HeunParamsQ p{q(-1), q(1, 3), q(2, 3), q(2, 5), q(1, 2), q(31, 30)};
  ODE e = heun_ode(p);
  std::vector<Rational> want{(q(1) - p.c).abs(), (q(1) - p.d).abs(),
                             (p.c + p.d - p.a - p.b).abs(), (p.a - p.b).abs()};
  std::sort(want.begin(), want.end());
  CHECK(exponent_difference_multiset(e) == want);
}
