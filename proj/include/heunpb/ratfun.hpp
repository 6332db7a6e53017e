#pragma once

// Rational functions over the rationals, normalized at construction:
// numerator and denominator coprime, denominator monic and nonzero.
// Equality is therefore structural.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "heunpb/poly.hpp"

namespace heunpb {

class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Rational(1)) {}
  RationalFunction(const Poly& n) : num_(n), den_(Rational(1)) {}
  RationalFunction(const Rational& c) : num_(Poly(c)), den_(Rational(1)) {}
  RationalFunction(long c) : RationalFunction(Rational(c)) {}
  RationalFunction(int c) : RationalFunction(Rational(static_cast<long>(c))) {}
  RationalFunction(Poly n, Poly d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw std::invalid_argument("RationalFunction: zero denominator");
    normalize();
  }

  static RationalFunction x() { return RationalFunction(Poly::x()); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  // degree as a map P1 -> P1
  int map_degree() const { return std::max(num_.degree(), den_.degree()); }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw std::invalid_argument("RationalFunction: division by zero function");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
  }
  RationalFunction operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
  }
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

  RationalFunction derivative() const {
    return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
  }

  RationalFunction inverse() const {
    if (is_zero()) throw std::invalid_argument("RationalFunction: inverse of zero");
    return RationalFunction(den_, num_);
  }

  // Substitution f(g).
  RationalFunction compose(const RationalFunction& g) const {
    int n = std::max(num_.degree(), den_.degree());
    if (n <= 0) return *this;
    std::vector<Poly> p_pow(static_cast<size_t>(n) + 1), q_pow(static_cast<size_t>(n) + 1);
    p_pow[0] = Poly(Rational(1));
    q_pow[0] = Poly(Rational(1));
    for (int i = 1; i <= n; ++i) {
      p_pow[static_cast<size_t>(i)] = p_pow[static_cast<size_t>(i - 1)] * g.num_;
      q_pow[static_cast<size_t>(i)] = q_pow[static_cast<size_t>(i - 1)] * g.den_;
    }
    auto homogenize = [&](const Poly& f) {
      Poly acc;
      for (int i = 0; i <= f.degree(); ++i)
        acc += f.coeff(i) * (p_pow[static_cast<size_t>(i)] * q_pow[static_cast<size_t>(n - i)]);
      return acc;
    };
    return RationalFunction(homogenize(num_), homogenize(den_));
  }

  // Exact evaluation; the point must not be a pole.
  Rational operator()(const Rational& x) const {
    Rational d = den_(x);
    if (d.is_zero()) throw pole_error("RationalFunction: pole at x = " + x.str());
    return num_(x) / d;
  }

  // Numeric evaluation at a complex point with pole detection relative to the
  // working precision.
  CFloat eval(const CFloat& x) const {
    CFloat d = den_(x);
    BigFloat scale = den_scale(abs(x));
    BigFloat tiny = pow10(-Precision::digits() + 4) * scale;
    if (abs(d) <= tiny)
      throw pole_error("RationalFunction: evaluation point within pole neighborhood (|den| = " +
                       abs(d).str(3) + " at " + x.str(8) + ")");
    return num_(x) / d;
  }

  std::string str(const std::string& var = "x") const {
    if (is_polynomial()) return num_.str(var);
    return "(" + num_.str(var) + ") / (" + den_.str(var) + ")";
  }

 private:
  BigFloat den_scale(const BigFloat& ax) const {
    BigFloat m(0L), p(1L);
    BigFloat axx = max(ax, BigFloat(1L));
    for (int i = 0; i <= den_.degree(); ++i) {
      m = max(m, abs(den_.coeff(i).to_float()) * p);
      p = p * axx;
    }
    return m;
  }

  void normalize() {
    if (num_.is_zero()) {
      den_ = Poly(Rational(1));
      return;
    }
    Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_.exact_div(g);
      den_ = den_.exact_div(g);
    }
    Rational lead = den_.leading();
    if (!lead.is_one()) {
      Rational inv = lead.inverse();
      num_ = inv * num_;
      den_ = inv * den_;
    }
  }

  Poly num_, den_;
};

// x -> (a*x + b)/(c*x + d), with ad - bc != 0.
class MoebiusMap {
 public:
  MoebiusMap(Rational a, Rational b, Rational c, Rational d)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    if ((a_ * d_ - b_ * c_).is_zero())
      throw std::invalid_argument("MoebiusMap: determinant is zero");
  }
  static MoebiusMap identity() { return {Rational(1), Rational(0), Rational(0), Rational(1)}; }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }
  const Rational& d() const { return d_; }

  MoebiusMap inverse() const { return {d_, -b_, -c_, a_}; }

  RationalFunction as_rational_function() const {
    return RationalFunction(Poly::linear(b_, a_), Poly::linear(d_, c_));
  }

 private:
  Rational a_, b_, c_, d_;
};

inline RationalFunction moebius_substitute(const RationalFunction& f, const MoebiusMap& m) {
  return f.compose(m.as_rational_function());
}

// rf_eval at an explicit working precision (decimal digits).
inline CFloat rf_eval(const RationalFunction& f, const CFloat& point, long digits) {
  Precision guard(digits);
  return f.eval(point);
}

}  // namespace heunpb
