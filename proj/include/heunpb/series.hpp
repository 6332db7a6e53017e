#pragma once

// Local solutions at x = 0 of the Gauss and Heun equations as truncated
// power series, over exact rationals or arbitrary-precision complex numbers.
//
// The Heun three-term recurrence used here is derived by substituting
// sum a_k x^k into the equation in polynomial-cleared form and collecting
// powers:
//
//   t (k+1)(k+c) a_{k+1} =
//     { k [ t (k-1+c+d) + k+a+b-d ] + q } a_k  -  (k-1+a)(k-1+b) a_{k-1}
//
// with a_0 = 1, so t c a_1 = q.  It is not copied from a reference; the
// series_ode_residual check in the test suite guards the derivation.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "heunpb/poly.hpp"

namespace heunpb {

struct outside_disc_error : convergence_error {
  using convergence_error::convergence_error;
};

template <class K>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
  static Rational from_long(long n) { return Rational(n); }
  static bool is_zero(const Rational& v) { return v.is_zero(); }
  static bool is_nonpositive_integer(const Rational& v) { return v.is_nonpositive_integer(); }
  static bool is_unit_interval_end(const Rational& v) { return v.is_zero() || v.is_one(); }
  static CFloat to_cfloat(const Rational& v) { return CFloat(v.to_float()); }
};

template <>
struct scalar_traits<CFloat> {
  static CFloat from_long(long n) { return CFloat(static_cast<long>(n)); }
  static bool is_zero(const CFloat& v) { return v.is_zero(); }
  static bool is_nonpositive_integer(const CFloat& v) {
    if (v.is_zero()) return true;
    BigFloat tol(1e-12);
    if (!(abs(v.imag()) < tol)) return false;
    if (v.real() > tol) return false;
    BigFloat r = v.real();
    long n = r.to_long();
    return abs(r - BigFloat(n)) < tol;
  }
  static bool is_unit_interval_end(const CFloat& v) {
    return v.is_zero() || v == CFloat(1L);
  }
  static CFloat to_cfloat(const CFloat& v) { return v; }
};

template <class K>
struct HpgParams {
  K A, B, C;

  void validate() const {
    if (scalar_traits<K>::is_nonpositive_integer(C))
      throw std::invalid_argument("2F1: C must not be zero or a negative integer");
  }
};

template <class K>
struct HeunParams {
  K t, q, a, b, c, d;

  // The equation itself only needs t outside {0, 1}; the local solution at
  // x = 0 additionally needs an admissible c.
  void validate_equation() const {
    if (scalar_traits<K>::is_unit_interval_end(t))
      throw std::invalid_argument("Heun: t must not be 0 or 1");
  }
  void validate() const {
    validate_equation();
    if (scalar_traits<K>::is_nonpositive_integer(c))
      throw std::invalid_argument("Heun: c must not be zero or a negative integer");
  }
};

using HpgParamsQ = HpgParams<Rational>;
using HeunParamsQ = HeunParams<Rational>;

inline HpgParams<CFloat> to_cfloat(const HpgParamsQ& p) {
  return {CFloat(p.A.to_float()), CFloat(p.B.to_float()), CFloat(p.C.to_float())};
}
inline HeunParams<CFloat> to_cfloat(const HeunParamsQ& p) {
  return {CFloat(p.t.to_float()), CFloat(p.q.to_float()), CFloat(p.a.to_float()),
          CFloat(p.b.to_float()), CFloat(p.c.to_float()), CFloat(p.d.to_float())};
}

// Power-series truncation centered at 0; coefficient[0] = 1 for normalized
// local solutions.  `terminated` marks series whose tail is exactly zero
// (Heun/2F1 polynomials), in which case the truncation is the whole function.
template <class K>
struct TruncatedSeries {
  std::vector<K> coeff;
  bool terminated = false;

  int order() const { return static_cast<int>(coeff.size()) - 1; }
};

// Exact-coefficient series as a polynomial (meaningful when terminated).
inline Poly series_poly(const TruncatedSeries<Rational>& s) { return Poly(s.coeff); }

template <class K>
TruncatedSeries<K> hpg_series(const HpgParams<K>& p, int order) {
  using tr = scalar_traits<K>;
  if (order < 0) throw std::invalid_argument("hpg_series: negative order");
  p.validate();
  TruncatedSeries<K> s;
  s.coeff.resize(static_cast<size_t>(order) + 1, tr::from_long(0));
  s.coeff[0] = tr::from_long(1);
  for (int k = 0; k < order; ++k) {
    K kk = tr::from_long(k);
    K num = (p.A + kk) * (p.B + kk);
    if (tr::is_zero(num) || tr::is_zero(s.coeff[static_cast<size_t>(k)])) {
      s.terminated = true;
      break;
    }
    s.coeff[static_cast<size_t>(k + 1)] =
        s.coeff[static_cast<size_t>(k)] * num / ((p.C + kk) * (kk + tr::from_long(1)));
  }
  return s;
}

template <class K>
TruncatedSeries<K> heun_series(const HeunParams<K>& p, int order) {
  using tr = scalar_traits<K>;
  if (order < 0) throw std::invalid_argument("heun_series: negative order");
  p.validate();
  TruncatedSeries<K> s;
  const K zero = tr::from_long(0), one = tr::from_long(1);
  s.coeff.resize(static_cast<size_t>(order) + 1, zero);
  s.coeff[0] = one;
  if (order >= 1) s.coeff[1] = p.q / (p.t * p.c);
  for (int k = 1; k < order; ++k) {
    K kk = tr::from_long(k);
    K coef_k = kk * (p.t * (kk - one + p.c + p.d) + kk + p.a + p.b - p.d) + p.q;
    K coef_km1 = (kk - one + p.a) * (kk - one + p.b);
    K denom = p.t * (kk + one) * (kk + p.c);
    s.coeff[static_cast<size_t>(k + 1)] =
        (coef_k * s.coeff[static_cast<size_t>(k)] - coef_km1 * s.coeff[static_cast<size_t>(k - 1)]) /
        denom;
    // two consecutive exact zeros force the whole tail to zero
    if (tr::is_zero(s.coeff[static_cast<size_t>(k + 1)]) && tr::is_zero(s.coeff[static_cast<size_t>(k)])) {
      s.terminated = true;
      break;
    }
  }
  if (order >= 1 && !s.terminated && tr::is_zero(s.coeff[static_cast<size_t>(order)]) &&
      order >= 2 && tr::is_zero(s.coeff[static_cast<size_t>(order - 1)]))
    s.terminated = true;
  return s;
}

inline BigFloat heun_radius(const HeunParamsQ& p) {
  return min(BigFloat(1L), abs(p.t.to_float()));
}
inline BigFloat heun_radius(const HeunParams<CFloat>& p) {
  return min(BigFloat(1L), abs(p.t));
}

struct EvalPolicy {
  double safety = 0.9;
  long max_terms = 10000;
  // relative tolerance for the three-consecutive-small-terms stop;
  // <= 0 means derive from the working precision (10^(5 - digits))
  double rel_tol = 0.0;
};

struct EvalResult {
  CFloat value;
  BigFloat error_estimate;  // magnitude of the last term added
  long terms = 0;
};

namespace detail {
inline BigFloat effective_tol(const EvalPolicy& pol) {
  if (pol.rel_tol > 0.0) return BigFloat(pol.rel_tol);
  return pow10(5 - Precision::digits());
}
}  // namespace detail

// Partial sum with adaptive truncation; stops once three consecutive terms
// fall below the relative tolerance.  `radius` is the convergence-radius
// bound of the series (min(1,|t|) for Heun, 1 for 2F1).
template <class K>
EvalResult eval_truncated(const TruncatedSeries<K>& s, const CFloat& x, const BigFloat& radius,
                          const EvalPolicy& pol = {}) {
  using tr = scalar_traits<K>;
  BigFloat ax = abs(x);
  if (!(ax < BigFloat(pol.safety) * radius))
    throw outside_disc_error("outside convergence region: |x| = " + ax.str(3) +
                             " >= " + (BigFloat(pol.safety) * radius).str(3));
  BigFloat tol = detail::effective_tol(pol);
  CFloat sum(0L), xp(1L);
  BigFloat last(0L);
  int small_run = 0;
  long used = 0;
  for (size_t k = 0; k < s.coeff.size(); ++k) {
    CFloat term = tr::to_cfloat(s.coeff[k]) * xp;
    sum += term;
    last = abs(term);
    ++used;
    if (last <= tol * max(abs(sum), pow10(-Precision::digits()))) {
      if (++small_run >= 3) return {sum, last, used};
    } else {
      small_run = 0;
    }
    xp *= x;
  }
  if (s.terminated) return {sum, BigFloat(0L), used};
  throw convergence_error("series did not converge within " + std::to_string(s.coeff.size()) +
                          " terms");
}

namespace detail {

template <class ParamsQ, class SeriesFn>
EvalResult adaptive_eval(const ParamsQ& p, const CFloat& x, const BigFloat& radius,
                         const EvalPolicy& pol, SeriesFn&& make_series) {
  long order = 128;
  for (;;) {
    auto s = make_series(p, static_cast<int>(std::min(order, pol.max_terms)));
    try {
      return eval_truncated(s, x, radius, pol);
    } catch (const outside_disc_error&) {
      throw;
    } catch (const convergence_error&) {
      if (order >= pol.max_terms)
        throw convergence_error("series did not converge within " +
                                std::to_string(pol.max_terms) + " terms");
      order *= 4;
    }
  }
}

}  // namespace detail

// Numeric evaluation of the local Heun/2F1 functions with the series length
// grown on demand up to the policy cap.  The recurrence runs in complex
// arbitrary-precision arithmetic; the series computed is the dominant
// solution of its recurrence, so forward recursion is stable.
inline EvalResult heun_eval(const HeunParamsQ& p, const CFloat& x, const EvalPolicy& pol = {}) {
  auto pc = to_cfloat(p);
  return detail::adaptive_eval(pc, x, heun_radius(p), pol,
                               [](const HeunParams<CFloat>& pp, int n) { return heun_series(pp, n); });
}
inline EvalResult heun_eval(const HeunParams<CFloat>& p, const CFloat& x, const EvalPolicy& pol = {}) {
  return detail::adaptive_eval(p, x, heun_radius(p), pol,
                               [](const HeunParams<CFloat>& pp, int n) { return heun_series(pp, n); });
}
inline EvalResult hpg_eval(const HpgParamsQ& p, const CFloat& x, const EvalPolicy& pol = {}) {
  auto pc = to_cfloat(p);
  return detail::adaptive_eval(pc, x, BigFloat(1L), pol,
                               [](const HpgParams<CFloat>& pp, int n) { return hpg_series(pp, n); });
}
inline EvalResult hpg_eval(const HpgParams<CFloat>& p, const CFloat& x, const EvalPolicy& pol = {}) {
  return detail::adaptive_eval(p, x, BigFloat(1L), pol,
                               [](const HpgParams<CFloat>& pp, int n) { return hpg_series(pp, n); });
}

namespace detail {

// distance from the branch cut (-inf, 0] of Log
inline BigFloat cut_distance(const CFloat& w) {
  if (w.real().sign() > 0) return abs(w);
  return abs(w.imag());
}

inline void ensure_off_cut(const CFloat& w, const char* what) {
  if (!(cut_distance(w) >= BigFloat(1e-6)))
    throw branch_error(std::string(what) + ": argument within 1e-6 of the branch cut");
}

}  // namespace detail

// 2F1(1-a, 1; 2; z) in closed form: (1 - (1-z)^a)/(a z) for a != 0 and
// -log(1-z)/z for a = 0, principal branches; z = 0 returns the limit 1.
inline CFloat hpg_degenerate_closed(const Rational& a, const CFloat& z) {
  if (z.is_zero()) return CFloat(1L);
  CFloat omz = CFloat(1L) - z;
  if (a.is_zero()) {
    detail::ensure_off_cut(omz, "hpg_degenerate_closed");
    return -log(omz) / z;
  }
  if (!a.is_integer()) detail::ensure_off_cut(omz, "hpg_degenerate_closed");
  return (CFloat(1L) - pow(omz, a)) / (CFloat(a.to_float()) * z);
}

// floating-exponent variant; |a| < 1e-30 dispatches to the logarithmic form
inline CFloat hpg_degenerate_closed(const BigFloat& a, const CFloat& z) {
  if (z.is_zero()) return CFloat(1L);
  CFloat omz = CFloat(1L) - z;
  detail::ensure_off_cut(omz, "hpg_degenerate_closed");
  if (abs(a) < pow10(-30)) return -log(omz) / z;
  return (CFloat(1L) - exp(CFloat(a) * log(omz))) / (CFloat(a) * z);
}

enum class DihedralVariant { upper, half };

// The two explicit dihedral 2F1 evaluations:
//   upper: 2F1(a/2, (a+1)/2; a+1; z)  = ((1 + sqrt(1-z))/2)^(-a)
//   half:  2F1(a/2, (a+1)/2; 1/2; z)  = ((1-sqrt z)^(-a) + (1+sqrt z)^(-a))/2
inline CFloat hpg_dihedral_closed(DihedralVariant variant, const Rational& a, const CFloat& z) {
  const CFloat one(1L);
  if (variant == DihedralVariant::upper) {
    CFloat omz = one - z;
    if (!omz.is_zero()) detail::ensure_off_cut(omz, "hpg_dihedral_closed(upper)");
    CFloat base = (one + sqrt(omz)) / CFloat(2L);
    return pow(base, -a);
  }
  if (!z.is_zero()) detail::ensure_off_cut(z, "hpg_dihedral_closed(half)");
  CFloat r = sqrt(z);
  CFloat bm = one - r, bp = one + r;
  if (!a.is_integer()) {
    detail::ensure_off_cut(bm, "hpg_dihedral_closed(half)");
    detail::ensure_off_cut(bp, "hpg_dihedral_closed(half)");
  }
  return (pow(bm, -a) + pow(bp, -a)) / CFloat(2L);
}

// True iff the first k coefficients of P2 s'' + P1 s' + P0 s vanish exactly.
inline bool series_ode_residual(const TruncatedSeries<Rational>& s, const Poly& P2, const Poly& P1,
                                const Poly& P0, int k) {
  if (k > s.order() - 2) throw std::invalid_argument("series_ode_residual: k exceeds order - 2");
  Poly y = series_poly(s);
  Poly y1 = y.derivative();
  Poly r = P2 * y1.derivative() + P1 * y1 + P0 * y;
  for (int j = 0; j <= k; ++j)
    if (!r.coeff(j).is_zero()) return false;
  return true;
}

}  // namespace heunpb
