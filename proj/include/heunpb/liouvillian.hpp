#pragma once

// Closed-form Liouvillian expressions: finite sums of
//     (rational function) * (product of rational powers of polynomials)
//                         * (optional logarithm of a polynomial),
// closed under differentiation.  All data is exact (rational coefficients
// and exponents); numeric evaluation uses principal branches and refuses
// points within 1e-6 of a branch cut.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "heunpb/ratfun.hpp"
#include "heunpb/series.hpp"

namespace heunpb {

struct PowerFactor {
  Poly base;
  Rational exp;
};

// Product of rational powers, kept in canonical form at all times (so values
// are immutable after construction and safe to share): each non-constant
// base is divided by its positive content (the sign of the leading
// coefficient is preserved, so (1-x) stays (1-x)), the extracted content
// becomes a constant-base factor, and identical bases merge by adding
// exponents.
class PowerProduct {
 public:
  PowerProduct() = default;

  static PowerProduct one() { return {}; }

  PowerProduct& mul(const Poly& base, const Rational& exp) {
    if (base.is_zero()) throw std::invalid_argument("PowerProduct: zero base");
    if (exp.is_zero() || base == Poly(Rational(1))) return *this;
    factors_.push_back({base, exp});
    normalize();
    return *this;
  }
  PowerProduct& mul(const PowerProduct& other) {
    for (const auto& f : other.factors_) factors_.push_back(f);
    normalize();
    return *this;
  }

  bool is_one() const { return factors_.empty(); }

  const std::vector<PowerFactor>& factors() const { return factors_; }

  // sum of e_i * b_i' / b_i; constant bases contribute nothing
  RationalFunction log_derivative() const {
    RationalFunction out;
    for (const auto& f : factors_) {
      if (f.base.is_constant()) continue;
      out += RationalFunction(f.exp * f.base.derivative(), f.base);
    }
    return out;
  }

  CFloat eval(const CFloat& x) const {
    CFloat acc(1L);
    for (const auto& f : factors_) {
      CFloat v = f.base(x);
      if (!f.exp.is_integer()) detail::ensure_off_cut(v, "PowerProduct");
      if (v.is_zero() && f.exp.sign() < 0)
        throw pole_error("PowerProduct: negative power of a vanishing base");
      acc *= pow(v, f.exp);
    }
    return acc;
  }

  friend bool operator==(const PowerProduct& a, const PowerProduct& b) {
    return a.key() == b.key();
  }

  // canonical text form, also used as the grouping key in residuals
  std::string key() const {
    std::string out;
    for (const auto& f : factors_) out += "(" + f.base.str() + ")^(" + f.exp.str() + ");";
    return out.empty() ? "1" : out;
  }

 private:
  static bool base_less(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
      if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
    }
    return false;
  }

  void normalize() {
    std::vector<PowerFactor> flat;
    for (const auto& f : factors_) {
      if (f.exp.is_zero()) continue;
      auto [ints, scale] = f.base.integer_form();
      (void)ints;
      Rational content = scale.abs();
      Poly prim = content.is_one() ? f.base : content.inverse() * f.base;
      if (prim.is_constant()) {
        if (!prim.constant().is_one()) flat.push_back({prim, f.exp});
      } else {
        flat.push_back({prim, f.exp});
      }
      if (!content.is_one()) flat.push_back({Poly(content), f.exp});
    }
    std::sort(flat.begin(), flat.end(),
              [](const PowerFactor& a, const PowerFactor& b) { return base_less(a.base, b.base); });
    std::vector<PowerFactor> merged;
    for (auto& f : flat) {
      if (!merged.empty() && merged.back().base == f.base) {
        merged.back().exp += f.exp;
        if (merged.back().exp.is_zero()) merged.pop_back();
      } else {
        merged.push_back(std::move(f));
      }
    }
    factors_ = std::move(merged);
  }

  std::vector<PowerFactor> factors_;
};

// Expands a power product with non-negative integer exponents into a
// polynomial (exact).
inline Poly pp_expand_integer(const PowerProduct& pp) {
  Poly out(Rational(1));
  for (const auto& f : pp.factors()) {
    if (!f.exp.is_integer() || f.exp.sign() < 0)
      throw std::invalid_argument("pp_expand_integer: exponents must be non-negative integers");
    out *= f.base.pow(static_cast<int>(f.exp.to_long()));
  }
  return out;
}

inline RationalFunction pp_log_derivative(const PowerProduct& pp) { return pp.log_derivative(); }

struct LvTerm {
  RationalFunction coeff;
  PowerProduct pp;
  std::optional<Poly> logfactor;  // multiplies the term by log(P(x))
};

class LiouvillianExpr {
 public:
  LiouvillianExpr() = default;

  static LiouvillianExpr zero() { return {}; }
  static LiouvillianExpr constant(const Rational& c) {
    LiouvillianExpr e;
    if (!c.is_zero()) e.terms_.push_back({RationalFunction(c), PowerProduct::one(), std::nullopt});
    return e;
  }

  LiouvillianExpr& add_term(RationalFunction coeff, PowerProduct pp,
                            std::optional<Poly> logfactor = std::nullopt) {
    if (logfactor && logfactor->is_zero())
      throw std::invalid_argument("LiouvillianExpr: log of the zero polynomial");
    if (!coeff.is_zero()) terms_.push_back({std::move(coeff), std::move(pp), std::move(logfactor)});
    return *this;
  }

  const std::vector<LvTerm>& terms() const { return terms_; }
  bool is_zero_expr() const { return terms_.empty(); }

  friend LiouvillianExpr operator+(const LiouvillianExpr& a, const LiouvillianExpr& b) {
    LiouvillianExpr out = a;
    for (const auto& t : b.terms_) out.terms_.push_back(t);
    return out;
  }

  LiouvillianExpr scaled(const RationalFunction& s) const {
    LiouvillianExpr out;
    if (s.is_zero()) return out;
    for (const auto& t : terms_) out.terms_.push_back({s * t.coeff, t.pp, t.logfactor});
    return out;
  }

  // Exact derivative in the same representation.  Product rule:
  //   (c * pp)'       = (c' + c L) pp          with L the log-derivative of pp
  //   (c * pp * logP)' = (c' + c L) pp logP + c (P'/P) pp
  LiouvillianExpr differentiate() const {
    LiouvillianExpr out;
    for (const auto& t : terms_) {
      RationalFunction dc = t.coeff.derivative() + t.coeff * t.pp.log_derivative();
      out.add_term(dc, t.pp, t.logfactor);
      if (t.logfactor) {
        RationalFunction dlog(t.logfactor->derivative(), *t.logfactor);
        out.add_term(t.coeff * dlog, t.pp, std::nullopt);
      }
    }
    return out;
  }

  CFloat eval(const CFloat& x) const {
    CFloat acc(0L);
    for (const auto& t : terms_) {
      CFloat v = t.coeff.eval(x) * t.pp.eval(x);
      if (t.logfactor) {
        CFloat w = (*t.logfactor)(x);
        detail::ensure_off_cut(w, "LiouvillianExpr log factor");
        v *= log(w);
      }
      acc += v;
    }
    return acc;
  }

  // Groups terms by (power product, log factor) and sums the rational
  // coefficient functions of each class.
  std::map<std::string, RationalFunction> collect() const {
    std::map<std::string, RationalFunction> classes;
    for (const auto& t : terms_) {
      std::string key = t.pp.key();
      if (t.logfactor) key += " * log(" + t.logfactor->str() + ")";
      auto [it, inserted] = classes.try_emplace(key, t.coeff);
      if (!inserted) it->second += t.coeff;
    }
    return classes;
  }

 private:
  std::vector<LvTerm> terms_;
};

// Exact residual of e against the polynomial-cleared operator
// P2 y'' + P1 y' + P0 y.  Returns std::nullopt for an exact zero, otherwise a
// witness naming a class with a non-vanishing coefficient.  Classes with
// structurally different power products are treated as independent, which can
// only make the test stricter, never falsely report zero.
inline std::optional<std::string> lv_operator_residual(const LiouvillianExpr& e, const Poly& P2,
                                                       const Poly& P1, const Poly& P0) {
  LiouvillianExpr d1 = e.differentiate();
  LiouvillianExpr d2 = d1.differentiate();
  LiouvillianExpr r = d2.scaled(RationalFunction(P2)) + d1.scaled(RationalFunction(P1)) +
                      e.scaled(RationalFunction(P0));
  for (const auto& [key, coeff] : r.collect()) {
    if (!coeff.is_zero())
      return "class " + key + " has residual coefficient " + coeff.str();
  }
  return std::nullopt;
}

}  // namespace heunpb
