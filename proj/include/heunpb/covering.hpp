#pragma once

// Covering families P1 -> P1 behind the cyclic and dihedral pull-backs, and
// their fiber passports.  All multiplicity data comes from exact squarefree
// decompositions; roots are never isolated numerically.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "heunpb/ratfun.hpp"

namespace heunpb {

// A branch point with phi-value outside {0, 1, infinity}.  The locus is a
// squarefree polynomial whose roots are the extra critical points; the value
// is filled in exactly when the locus is linear.
struct ExtraBranch {
  Poly locus;
  int order = 2;
  std::optional<Rational> value;
};

struct Passport {
  std::vector<int> over0, over1, over_inf;  // sorted descending

  int distinct_points() const {
    return static_cast<int>(over0.size() + over1.size() + over_inf.size());
  }
};

struct Covering {
  RationalFunction phi;
  int degree = 0;
  Passport passport;
  std::vector<ExtraBranch> extra_branch_values;
  bool belyi = false;

  // family metadata, used for serialization
  std::string family;  // "cyclic" | "dihedral" | "nonbelyi" | "" for generic
  std::optional<long> N, M;
  std::optional<Rational> s;
};

// Theta1 + x^(3/2) Theta2 = (1 + sqrt x)^N (1 - N sqrt x / M)^M
struct DihedralPair {
  Poly Theta1, Theta2;
  long N = 0, M = 0;
};

namespace detail {

// Strips from e every factor shared with f, repeatedly.
inline Poly strip_shared_factors(Poly e, const Poly& f) {
  if (f.degree() <= 0) return e;
  for (;;) {
    Poly g = gcd(e, f);
    if (g.degree() <= 0) return e;
    e = e.exact_div(g);
  }
}

}  // namespace detail

// Fiber passport of a nonconstant rational map over {0, 1, infinity}, the
// extra branch data, and the Belyi flag via the distinct-point count
// (a degree-d Belyi map has exactly d + 2 distinct points over {0,1,inf}).
inline Covering passport(const RationalFunction& phi) {
  if (phi.is_constant()) throw std::invalid_argument("passport: constant map");
  Covering c;
  c.phi = phi;
  c.degree = phi.map_degree();
  const Poly& num = phi.num();
  const Poly& den = phi.den();
  Poly num1 = num - den;  // numerator of phi - 1; coprime to den automatically

  auto profile = [&](const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("passport: phi takes a value in {0,1} identically");
    return multiplicity_profile(p, c.degree);
  };
  c.passport.over0 = profile(num);
  c.passport.over1 = profile(num1);
  c.passport.over_inf = profile(den);

  c.belyi = c.passport.distinct_points() == c.degree + 2;

  // Finite critical points with phi-value outside {0,1,inf}: start from the
  // numerator of phi' and strip everything accounted for by the three fibers.
  Poly crit = phi.derivative().num();
  if (!crit.is_zero()) {
    crit = detail::strip_shared_factors(crit, num);
    crit = detail::strip_shared_factors(crit, num1);
    crit = detail::strip_shared_factors(crit, den);
  }
  if (crit.degree() > 0) {
    for (const auto& [locus, mult] : squarefree_decomposition(crit)) {
      ExtraBranch eb;
      eb.locus = locus;
      eb.order = mult + 1;
      if (locus.degree() == 1) {
        Rational root = -locus.coeff(0) / locus.coeff(1);
        eb.value = phi(root);
      }
      c.extra_branch_values.push_back(std::move(eb));
    }
  }
  return c;
}

// phi = 1 - (1-x)^N (1 + N x / M)^M, the Belyi covering of degree D = N + M
// pulling the cyclic hypergeometric family back to Heun equations.
inline Covering cyclic_covering(long N, long M) {
  if (N < 1 || M < 1) throw std::invalid_argument("cyclic_covering: N, M must be positive");
  Poly one_minus_x = Poly::linear(Rational(1), Rational(-1));
  Poly inner = Poly::linear(Rational(1), Rational(N, M));
  Poly phi = Poly(Rational(1)) - one_minus_x.pow(static_cast<int>(N)) * inner.pow(static_cast<int>(M));
  Covering c = passport(RationalFunction(phi));
  c.family = "cyclic";
  c.N = N;
  c.M = M;
  return c;
}

// Expands (1 + u)^N (1 - N u / M)^M in u = sqrt x and splits integer powers
// into Theta1 and powers u^(2k+3) into Theta2; the u^1 coefficient cancels
// identically.  phi = x^3 Theta2^2 / Theta1^2.
inline std::pair<Covering, DihedralPair> dihedral_covering(long N, long M) {
  if (N < 1 || M < 1) throw std::invalid_argument("dihedral_covering: N, M must be positive");
  if (N == M) throw std::invalid_argument("dihedral_covering: degenerate covering (N = M)");
  Poly up = Poly::linear(Rational(1), Rational(1));
  Poly um = Poly::linear(Rational(1), Rational(-N, M));
  Poly in_u = up.pow(static_cast<int>(N)) * um.pow(static_cast<int>(M));

  if (!in_u.coeff(1).is_zero())
    throw std::logic_error("dihedral_covering: u^1 coefficient did not cancel");
  std::vector<Rational> t1, t2;
  for (int k = 0; k <= in_u.degree(); ++k) {
    if (k % 2 == 0)
      t1.push_back(in_u.coeff(k));
    else if (k >= 3)
      t2.push_back(in_u.coeff(k));
  }
  DihedralPair pair{Poly(std::move(t1)), Poly(std::move(t2)), N, M};

  Poly x3 = Poly::monomial(Rational(1), 3);
  Covering c = passport(RationalFunction(x3 * pair.Theta2 * pair.Theta2, pair.Theta1 * pair.Theta1));
  c.family = "dihedral";
  c.N = N;
  c.M = M;
  return {std::move(c), std::move(pair)};
}

// phi_s = 4 s x (2-x) / (x^2 - 2x - s)^2, the parametric degree-4 family;
// generically one extra branch point of order 2 with value 4s/(s+1)^2, and a
// Belyi covering exactly at s = 1 and s = -1.
inline Covering nonbelyi_covering(const Rational& s) {
  // s = 0 collapses phi to the constant 0; s = -1 is fine (the map is the
  // Belyi covering -4x(2-x)/(x-1)^4, only the extra-branch-value formula
  // degenerates there).
  if (s.is_zero()) throw std::invalid_argument("nonbelyi_covering: s = 0 degenerates the family");
  Poly num = Rational(4) * s * Poly(std::vector<Rational>{Rational(0), Rational(2), Rational(-1)});
  Poly den_base(std::vector<Rational>{-s, Rational(-2), Rational(1)});
  Covering c = passport(RationalFunction(num, den_base * den_base));
  c.family = "nonbelyi";
  c.s = s;

  // cross-check the analytic extra branch value 4s/(s+1)^2
  if (s != Rational(-1)) {
    Rational expected = Rational(4) * s / ((s + Rational(1)) * (s + Rational(1)));
    for (const auto& eb : c.extra_branch_values) {
      if (eb.value && *eb.value != expected)
        throw std::logic_error("nonbelyi_covering: extra branch value mismatch");
    }
  }
  return c;
}

inline RationalFunction compose(const RationalFunction& g, const RationalFunction& h) {
  return g.compose(h);
}

}  // namespace heunpb
