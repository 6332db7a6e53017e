#pragma once

// Exact rational numbers over arbitrary-precision integers.  Values are kept
// canonical at all times: gcd(|num|, den) = 1 and den >= 1, so equality is
// structural.

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "heunpb/bigfloat.hpp"
#include "heunpb/complexfloat.hpp"

namespace heunpb {

using Int = mpz_class;

class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}
  Rational(int n) : v_(static_cast<long>(n)) {}
  Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_.canonicalize();
  }
  Rational(const Int& num, const Int& den) : v_(num, den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_.canonicalize();
  }
  explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

  // Accepts "p/q" and "p", with optional leading '-'.
  static Rational parse(const std::string& s) {
    mpq_class q;
    try {
      q = mpq_class(s, 10);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    }
    if (q.get_den() == 0) throw std::invalid_argument("Rational: zero denominator in '" + s + "'");
    q.canonicalize();
    return Rational(std::move(q));
  }

  Int num() const { return v_.get_num(); }
  Int den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  bool is_nonpositive_integer() const { return is_integer() && v_ <= 0; }
  int sign() const { return sgn(v_); }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::invalid_argument("Rational: division by zero");
    return Rational(mpq_class(a.v_ / b.v_));
  }
  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  Rational inverse() const {
    if (is_zero()) throw std::invalid_argument("Rational: inverse of zero");
    return Rational(mpq_class(1 / v_));
  }

  Rational pow(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero()) {
      if (e < 0) throw std::invalid_argument("Rational: 0 to a negative power");
      return Rational(0);
    }
    mpq_class r;
    unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(v_.get_mpq_t()), n);
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(v_.get_mpq_t()), n);
    Rational out{std::move(r)};
    return e < 0 ? out.inverse() : out;
  }

  // Exact square root when numerator and denominator are perfect squares.
  std::optional<Rational> sqrt_exact() const {
    if (sign() < 0) return std::nullopt;
    if (mpz_perfect_square_p(mpq_numref(v_.get_mpq_t())) == 0) return std::nullopt;
    if (mpz_perfect_square_p(mpq_denref(v_.get_mpq_t())) == 0) return std::nullopt;
    mpz_class n, d;
    mpz_sqrt(n.get_mpz_t(), mpq_numref(v_.get_mpq_t()));
    mpz_sqrt(d.get_mpz_t(), mpq_denref(v_.get_mpq_t()));
    return Rational(n, d);
  }

  Rational abs() const { return sign() < 0 ? -*this : *this; }

  long to_long() const {
    if (!is_integer()) throw std::invalid_argument("Rational: not an integer");
    return static_cast<long>(v_.get_num().get_si());
  }

  BigFloat to_float() const { return BigFloat::from_mpq(v_.get_mpq_t()); }
  double to_double() const { return v_.get_d(); }

  std::string str() const { return v_.get_str(); }

 private:
  mpq_class v_;
};

inline Rational abs(const Rational& a) { return a.abs(); }

// Real power with rational exponent; base must be positive unless the
// exponent is an integer.
inline BigFloat pow(const BigFloat& base, const Rational& e) {
  if (e.is_integer()) return pow(base, e.num().get_si());
  if (base.sign() <= 0) throw branch_error("rational power of non-positive real");
  return exp(e.to_float() * log(base));
}

// Principal power z^e = exp(e * Log z); integer exponents avoid the branch
// cut entirely via binary powering.
inline CFloat pow(const CFloat& z, const Rational& e) {
  if (e.is_zero()) return CFloat(1L);
  if (e.is_integer()) return pow(z, e.num().get_si());
  if (z.is_zero()) {
    if (e.sign() > 0) return CFloat(0L);
    throw pole_error("zero base with negative exponent");
  }
  if (z.is_real() && z.real().sign() > 0) return CFloat(pow(z.real(), e));
  return exp(CFloat(e.to_float()) * log(z));
}

}  // namespace heunpb
