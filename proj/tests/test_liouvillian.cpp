#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "heunpb/liouvillian.hpp"
#include "heunpb/pullback.hpp"
#include "test_support.hpp"

using namespace heunpb;
using namespace heunpb::testing;

namespace {

// (x-1)^a (a x + b)^b — the general-solution building block of the cyclic
// family.
LiouvillianExpr cyclic_block(const Rational& a, const Rational& b) {
  PowerProduct pp;
  pp.mul(poly({-1, 1}), a);
  pp.mul(Poly::linear(b, a), b);
  LiouvillianExpr e;
  e.add_term(RationalFunction(1), pp);
  return e;
}

LiouvillianExpr random_expr(SplitMix64& rng) {
  LiouvillianExpr e;
  int nterms = 1 + static_cast<int>(rng.below(2));
  for (int i = 0; i < nterms; ++i) {
    Poly num(std::vector<Rational>{random_rational(rng, 3, 3), random_rational(rng, 3, 3)});
    if (num.is_zero()) num = Poly(q(1));
    RationalFunction coeff(num, poly({2, 1}));
    PowerProduct pp;
    if (rng.below(2)) pp.mul(poly({1, -1}), random_rational(rng, 2, 3));
    if (rng.below(2)) pp.mul(Poly::linear(q(1), q(1, 2)), random_rational(rng, 2, 3));
    if (rng.below(2)) pp.mul(Poly::x(), q(rng.range(-1, 2)) + q(1, 2));
    std::optional<Poly> logf;
    if (rng.below(2)) logf = poly({2, 1});
    e.add_term(coeff, pp, logf);
  }
  return e;
}

}  // namespace

TEST_CASE("power product log derivative") {
  Rational a(1, 2), b(1, 3);
  PowerProduct pp;
  pp.mul(poly({1, -1}), a);              // (1-x)^a
  pp.mul(Poly::linear(q(1), a / b), b);  // (1 + a x / b)^b
  RationalFunction got = pp_log_derivative(pp);
  RationalFunction want = RationalFunction(Poly(-a), poly({1, -1})) +
                          RationalFunction(Poly(a * b), Poly::linear(b, a));
  CHECK(got == want);

  PowerProduct root;
  root.mul(Poly::x(), q(1, 2));
  CHECK(pp_log_derivative(root) == RationalFunction(Poly(q(1, 2)), Poly::x()));

  CHECK(pp_log_derivative(PowerProduct::one()) == RationalFunction(0));

  // constant bases contribute nothing
  PowerProduct c;
  c.mul(Poly(q(5, 7)), q(2, 3));
  CHECK(pp_log_derivative(c) == RationalFunction(0));
}

TEST_CASE("power product canonicalization") {
  // (2 - 2x)^e splits into the constant 2^e and (1 - x)^e, so rational
  // multiples of the same base land in the same class
  PowerProduct p1;
  p1.mul(poly({2, -2}), q(1, 2));
  PowerProduct p2;
  p2.mul(poly({1, -1}), q(1, 2));
  p2.mul(Poly(q(2)), q(1, 2));
  CHECK(p1 == p2);

  // exponents of identical bases add up; zero exponents drop out
  PowerProduct p3;
  p3.mul(poly({1, -1}), q(1, 2));
  p3.mul(poly({1, -1}), q(-1, 2));
  CHECK(p3.is_one());

  CHECK_THROWS_AS(PowerProduct().mul(Poly(), q(1)), std::invalid_argument);
}

TEST_CASE("differentiate: rational, power-product, and log terms") {
  // pure rational term
  LiouvillianExpr r;
  r.add_term(RationalFunction(poly({0, 0, 1})), PowerProduct::one());
  auto dr = r.differentiate();
  REQUIRE(dr.terms().size() == 1);
  CHECK(dr.terms()[0].coeff == RationalFunction(poly({0, 2})));

  // power product: derivative is the product times its log-derivative
  Rational a(1, 2), b(1, 3);
  LiouvillianExpr e = cyclic_block(a, b);
  auto de = e.differentiate();
  REQUIRE(de.terms().size() == 1);
  CHECK(de.terms()[0].coeff == e.terms()[0].pp.log_derivative());
  CHECK(de.terms()[0].pp == e.terms()[0].pp);

  // log(1-x) spawns the rational term -1/(1-x) = 1/(x-1)
  LiouvillianExpr lg;
  lg.add_term(RationalFunction(1), PowerProduct::one(), poly({1, -1}));
  auto dlg = lg.differentiate();
  auto classes = dlg.collect();
  CHECK(classes.at("1") == RationalFunction(Poly(q(1)), poly({-1, 1})));
}

TEST_CASE("lv_eval examples") {
  Precision guard(50);
  // ((a x + b)/(a + b))^b at x = 1 is exactly 1
  Rational a(3, 5), b(-2, 7);
  PowerProduct pp;
  pp.mul(Poly::linear(b, a), b);
  pp.mul(Poly(a + b), -b);
  LiouvillianExpr e;
  e.add_term(RationalFunction(1), pp);
  CHECK(rel_err(e.eval(CFloat(BigFloat(1.0))), CFloat(1L)) < 1e-45);

  // -(2M/(N D x^2)) (N log(1-x) + M log(1 + N x/M)) at (N,M) = (1,1), x = 1/2
  long N = 1, M = 1, D = N + M;
  RationalFunction inv_x2(Poly(Rational(-2 * M, N * D)), poly({0, 0, 1}));
  LiouvillianExpr lg;
  lg.add_term(inv_x2 * RationalFunction(Rational(N)), PowerProduct::one(), poly({1, -1}));
  lg.add_term(inv_x2 * RationalFunction(Rational(M)), PowerProduct::one(),
              Poly::linear(q(1), Rational(N, M)));
  CFloat got = lg.eval(CFloat(q(1, 2).to_float()));
  // -4 (log(1/2) + log(3/2)) = 4 log(4/3)
  CFloat want(BigFloat(4L) * log(q(4, 3).to_float()));
  CHECK(rel_err(got, want) < 1e-45);

  // (1+u)^(-a) (1 - (a/b) u)^(-b) at u = 0
  PowerProduct dih;
  dih.mul(poly({1, 1}), -a);
  dih.mul(Poly::linear(q(1), -(a / b)), -b);
  LiouvillianExpr d;
  d.add_term(RationalFunction(1), dih);
  CHECK(d.eval(CFloat(0L)) == CFloat(1L));

  // branch guard: (1-x)^(1/2) within 1e-6 of the cut
  PowerProduct bad;
  bad.mul(poly({1, -1}), q(1, 2));
  LiouvillianExpr be;
  be.add_term(RationalFunction(1), bad);
  CHECK_THROWS_AS(be.eval(CFloat(BigFloat(1.0) - pow10(-9))), branch_error);

  // pole of a coefficient
  LiouvillianExpr pe;
  pe.add_term(RationalFunction(Poly(q(1)), Poly::x()), PowerProduct::one());
  CHECK_THROWS_AS(pe.eval(CFloat(0L)), pole_error);
}

TEST_CASE("lv_ode_residual: the cyclic general solution") {
  // (x-1)^a (a x + b)^b solves the Heun equation with
  // (a,b,c,d,t,q) = (0, -a-b, -1, 1-a, -b/a, 0)
  Rational a(1, 2), b(1, 3);
  HeunParamsQ p{-(b / a), q(0), q(0), -(a + b), q(-1), q(1) - a};
  ODE ode = heun_ode(p);

  CHECK(!lv_ode_residual(cyclic_block(a, b), ode).has_value());
  CHECK(!lv_ode_residual(LiouvillianExpr::constant(q(1)), ode).has_value());

  LiouvillianExpr x_term;
  x_term.add_term(RationalFunction(Poly::x()), PowerProduct::one());
  auto witness = lv_ode_residual(x_term, ode);
  REQUIRE(witness.has_value());
  CHECK(!witness->empty());

  // a second parameter pair, plus the exact-zero -> tiny numeric residual link
  Rational a2(2, 7), b2(3, 5);
  HeunParamsQ p2{-(b2 / a2), q(0), q(0), -(a2 + b2), q(-1), q(1) - a2};
  ODE ode2 = heun_ode(p2);
  LiouvillianExpr sol2 = cyclic_block(a2, b2);
  CHECK(!lv_ode_residual(sol2, ode2).has_value());

  Precision guard(50);
  ClearedODE c = cleared(ode2);
  LiouvillianExpr d1 = sol2.differentiate();
  LiouvillianExpr d2 = d1.differentiate();
  for (int i = 1; i <= 10; ++i) {
    CFloat x((q(1) + Rational(i, 11)).to_float());  // right of both branch points
    CFloat resid = CFloat(c.P2(x)) * d2.eval(x) + CFloat(c.P1(x)) * d1.eval(x) +
                   CFloat(c.P0(x)) * sol2.eval(x);
    CHECK(abs(resid).to_double() < 1e-30);
  }
}

TEST_CASE("derivative agrees with central finite differences") {
  Precision guard(50);
  SplitMix64 rng(314159);
  BigFloat h = pow10(-6);
  int done = 0;
  while (done < 20) {
    LiouvillianExpr e = random_expr(rng);
    if (e.terms().empty()) continue;
    LiouvillianExpr de = e.differentiate();
    Rational xq = random_in(rng, q(1, 10), q(3, 5));
    CFloat x(xq.to_float());
    CFloat left = e.eval(CFloat(x.real() - h));
    CFloat right = e.eval(CFloat(x.real() + h));
    CFloat fd = (right - left) / CFloat(h * BigFloat(2L));
    CFloat exact = de.eval(x);
    if (abs(exact).to_double() < 1e-8) continue;  // avoid 0/0 comparisons
    CHECK(rel_err(fd, exact) < 1e-6);
    ++done;
  }
}

TEST_CASE("sqrt(x)-conjugate product of the dihedral expansion") {
  // (1+u)^N (1-Nu/M)^M * (1-u)^N (1+Nu/M)^M = (1-u^2)^N (1-N^2 u^2 / M^2)^M
  for (long N = 1; N <= 9; ++N) {
    for (long M = N + 1; M <= 9; ++M) {
      Rational r(N, M);
      PowerProduct lhs;
      lhs.mul(poly({1, 1}), q(N));
      lhs.mul(Poly::linear(q(1), -r), q(M));
      lhs.mul(poly({1, -1}), q(N));
      lhs.mul(Poly::linear(q(1), r), q(M));
      Poly expanded = pp_expand_integer(lhs);

      PowerProduct rhs;
      rhs.mul(poly({1, 0, -1}), q(N));
      rhs.mul(Poly(std::vector<Rational>{q(1), q(0), -r * r}), q(M));
      CHECK(expanded == pp_expand_integer(rhs));

      // only even powers of u appear, so it is a polynomial in x = u^2
      for (int k = 1; k <= expanded.degree(); k += 2) CHECK(expanded.coeff(k).is_zero());
    }
  }
}
