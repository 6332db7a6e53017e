#pragma once

// Second-order ODEs  y'' + p1(x) y' + p0(x) y = 0  with rational-function
// coefficients: the Gauss and Heun equations, exact pull-back
// z -> phi(x), Y(x) = theta(x) y(phi(x)), indicial exponents at regular
// singular points, and Heun-shape matching.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "heunpb/liouvillian.hpp"
#include "heunpb/ratfun.hpp"
#include "heunpb/series.hpp"

namespace heunpb {

struct ODE {
  RationalFunction p1, p0;

  friend bool operator==(const ODE& a, const ODE& b) { return a.p1 == b.p1 && a.p0 == b.p0; }
  friend bool operator!=(const ODE& a, const ODE& b) { return !(a == b); }
};

// Common-denominator form P2 y'' + P1 y' + P0 y with polynomial coefficients.
struct ClearedODE {
  Poly P2, P1, P0;
};

inline ClearedODE cleared(const ODE& ode) {
  const Poly& d1 = ode.p1.den();
  const Poly& d0 = ode.p0.den();
  Poly g = gcd(d1, d0);
  Poly l = d1.exact_div(g) * d0;  // lcm up to a constant
  return {l, ode.p1.num() * d0.exact_div(g), ode.p0.num() * d1.exact_div(g)};
}

inline ODE hpg_ode(const HpgParamsQ& p) {
  Poly x = Poly::x();
  Poly xm1 = Poly::linear(Rational(-1), Rational(1));
  RationalFunction p1 = RationalFunction(Poly(p.C), x) +
                        RationalFunction(Poly(p.A + p.B - p.C + Rational(1)), xm1);
  RationalFunction p0(Poly(p.A * p.B), x * xm1);
  return {p1, p0};
}

inline ODE heun_ode(const HeunParamsQ& p) {
  p.validate_equation();
  Poly x = Poly::x();
  Poly xm1 = Poly::linear(Rational(-1), Rational(1));
  Poly xmt = Poly::linear(-p.t, Rational(1));
  Rational e = p.a + p.b - p.c - p.d + Rational(1);
  RationalFunction p1 = RationalFunction(Poly(p.c), x) + RationalFunction(Poly(p.d), xm1) +
                        RationalFunction(Poly(e), xmt);
  RationalFunction p0(Poly::linear(-p.q, p.a * p.b), x * xm1 * xmt);
  return {p1, p0};
}

struct PullbackSpec {
  ODE source;          // equation in z
  RationalFunction phi;  // z = phi(x)
  PowerProduct theta;    // radical prefactor, Y = theta * y(phi)
};

// The unique equation satisfied by Y(x) = theta(x) y(phi(x)).  With
// u = phi' and L = theta'/theta (a rational function for radical theta):
//   ptilde1 = u p1(phi) - u'/u,   ptilde0 = u^2 p0(phi)
//   new p1 = ptilde1 - 2 L
//   new p0 = ptilde0 - ptilde1 L + L^2 - L'
// Apparent cancellations happen automatically in exact arithmetic.
inline ODE transform_ode(const PullbackSpec& pb) {
  if (pb.phi.is_constant()) throw std::invalid_argument("transform_ode: phi must be nonconstant");
  RationalFunction u = pb.phi.derivative();
  RationalFunction pt1 = u * pb.source.p1.compose(pb.phi) - u.derivative() / u;
  RationalFunction pt0 = u * u * pb.source.p0.compose(pb.phi);
  RationalFunction L = pb.theta.log_derivative();
  if (L.is_zero()) return {pt1, pt0};
  return {pt1 - RationalFunction(Rational(2)) * L, pt0 - pt1 * L + L * L - L.derivative()};
}

// Equation in u = 1/x satisfied by y(1/u); used for the point at infinity.
inline ODE ode_at_infinity(const ODE& ode) {
  RationalFunction inv(Poly(Rational(1)), Poly::x());
  return transform_ode({ode, inv, PowerProduct::one()});
}

namespace detail {

inline Rational limit_after_clearing(const RationalFunction& f, const Rational& pt, int order) {
  // value of (x - pt)^order * f at pt, assuming den has pt-multiplicity order
  Poly shifted = f.den();
  Poly lin = Poly::linear(-pt, Rational(1));
  for (int i = 0; i < order; ++i) shifted = shifted.exact_div(lin);
  return f.num()(pt) / shifted(pt);
}

}  // namespace detail

// The two indicial roots at a finite regular or regular-singular point,
// sorted ascending; {0, 1} at an ordinary point.  Irrational indicial roots
// are outside this artifact's scope and raise numeric_error.
inline std::pair<Rational, Rational> local_exponents(const ODE& ode, const Rational& point) {
  int k1 = ode.p1.is_zero() ? 0 : ode.p1.den().root_multiplicity(point);
  int k0 = ode.p0.is_zero() ? 0 : ode.p0.den().root_multiplicity(point);
  if (k1 > 1 || k0 > 2)
    throw numeric_error("local_exponents: irregular singularity at x = " + point.str());
  Rational r = (k1 == 1) ? detail::limit_after_clearing(ode.p1, point, 1) : Rational(0);
  Rational s = (k0 == 2) ? detail::limit_after_clearing(ode.p0, point, 2) : Rational(0);
  // rho^2 + (r - 1) rho + s = 0
  Rational disc = (r - Rational(1)) * (r - Rational(1)) - Rational(4) * s;
  auto sq = disc.sqrt_exact();
  if (!sq) throw numeric_error("local_exponents: irrational exponents at x = " + point.str());
  Rational lo = (Rational(1) - r - *sq) / Rational(2);
  Rational hi = (Rational(1) - r + *sq) / Rational(2);
  return {lo, hi};
}

inline std::pair<Rational, Rational> local_exponents_at_infinity(const ODE& ode) {
  return local_exponents(ode_at_infinity(ode), Rational(0));
}

namespace detail {

inline std::vector<Int> divisors_of(const Int& n_in) {
  Int n = ::abs(n_in);
  if (!n.fits_slong_p())
    throw numeric_error("singular support: coefficient too large for rational root isolation");
  long v = n.get_si();
  std::vector<Int> out;
  for (long d = 1; d * d <= v; ++d) {
    if (v % d == 0) {
      out.emplace_back(d);
      out.emplace_back(v / d);
    }
  }
  return out;
}

}  // namespace detail

// All rational roots of p with multiplicities; throws if a nonconstant factor
// with no rational roots remains (irrational singular support is out of
// scope for the equations handled here).
inline std::vector<std::pair<Rational, int>> rational_roots(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");
  std::vector<std::pair<Rational, int>> out;
  Poly rem = p;
  int m0 = rem.root_multiplicity(Rational(0));
  if (m0 > 0) {
    out.emplace_back(Rational(0), m0);
    for (int i = 0; i < m0; ++i) rem = rem.exact_div(Poly::x());
  }
  if (rem.degree() > 0) {
    auto [ints, scale] = rem.integer_form();
    (void)scale;
    for (const Int& pn : detail::divisors_of(ints.front())) {
      for (const Int& qd : detail::divisors_of(ints.back())) {
        for (int sign : {1, -1}) {
          Rational cand(sign * pn, qd);
          int m = rem.root_multiplicity(cand);
          if (m > 0) {
            out.emplace_back(cand, m);
            Poly lin = Poly::linear(-cand, Rational(1));
            for (int i = 0; i < m; ++i) rem = rem.exact_div(lin);
          }
        }
        if (rem.degree() == 0) break;
      }
      if (rem.degree() == 0) break;
    }
  }
  if (rem.degree() > 0)
    throw numeric_error("rational_roots: nonconstant factor without rational roots: " + rem.str());
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

// Finite singular points: the poles of the coefficients.
inline std::vector<Rational> singular_support(const ODE& ode) {
  Poly d = ode.p1.den() * ode.p0.den();
  std::vector<Rational> pts;
  for (const auto& [r, m] : rational_roots(d)) {
    (void)m;
    pts.push_back(r);
  }
  return pts;  // sorted, de-duplicated by construction of rational_roots on d
}

// Absolute exponent differences at every pole of the coefficients plus the
// point at infinity, sorted ascending.
inline std::vector<Rational> exponent_difference_multiset(const ODE& ode) {
  std::vector<Rational> out;
  for (const Rational& pt : singular_support(ode)) {
    auto [lo, hi] = local_exponents(ode, pt);
    out.push_back((hi - lo).abs());
  }
  auto [lo, hi] = local_exponents_at_infinity(ode);
  out.push_back((hi - lo).abs());
  std::sort(out.begin(), out.end());
  return out;
}

struct HeunMatch {
  bool match = false;
  std::string detail;                     // empty on match
  std::vector<Rational> singular_points;  // actual finite singular support
};

// Structural comparison against heun_ode(expected).  No Moebius
// normalization is attempted; the mismatch report carries the actual
// singular support so a caller can apply moebius_substitute itself.
inline HeunMatch match_heun(const ODE& ode, const HeunParamsQ& expected) {
  ODE want = heun_ode(expected);
  HeunMatch m;
  try {
    m.singular_points = singular_support(ode);
  } catch (const numeric_error&) {
    // irrational support; leave the list empty and still report coefficients
  }
  if (ode.p1 != want.p1) {
    m.detail = "p1 differs: got " + ode.p1.str() + ", expected " + want.p1.str();
    return m;
  }
  if (ode.p0 != want.p0) {
    m.detail = "p0 differs: got " + ode.p0.str() + ", expected " + want.p0.str();
    return m;
  }
  m.match = true;
  return m;
}

inline bool series_ode_residual(const TruncatedSeries<Rational>& s, const ODE& ode, int k) {
  ClearedODE c = cleared(ode);
  return series_ode_residual(s, c.P2, c.P1, c.P0, k);
}

// Exact residual of a Liouvillian expression in the ODE; nullopt == exact 0.
inline std::optional<std::string> lv_ode_residual(const LiouvillianExpr& e, const ODE& ode) {
  ClearedODE c = cleared(ode);
  return lv_operator_residual(e, c.P2, c.P1, c.P0);
}

}  // namespace heunpb
