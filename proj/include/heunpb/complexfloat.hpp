#pragma once

// Complex numbers over BigFloat with principal-branch elementary functions:
// Log has imaginary part in (-pi, pi], powers are exp(e*Log z), sqrt is the
// principal square root.  Real positive arguments take the real code path.

#include <string>

#include "heunpb/bigfloat.hpp"

namespace heunpb {

class CFloat {
 public:
  CFloat() = default;
  CFloat(BigFloat re) : re_(std::move(re)) {}
  CFloat(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {}
  CFloat(double re) : re_(re) {}
  CFloat(long re) : re_(re) {}
  CFloat(int re) : re_(static_cast<long>(re)) {}

  const BigFloat& real() const { return re_; }
  const BigFloat& imag() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  friend CFloat operator+(const CFloat& a, const CFloat& b) {
    return {a.re_ + b.re_, a.im_ + b.im_};
  }
  friend CFloat operator-(const CFloat& a, const CFloat& b) {
    return {a.re_ - b.re_, a.im_ - b.im_};
  }
  friend CFloat operator*(const CFloat& a, const CFloat& b) {
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
  }
  friend CFloat operator/(const CFloat& a, const CFloat& b) {
    BigFloat d = b.re_ * b.re_ + b.im_ * b.im_;
    if (d.is_zero()) throw pole_error("complex division by zero");
    return {(a.re_ * b.re_ + a.im_ * b.im_) / d, (a.im_ * b.re_ - a.re_ * b.im_) / d};
  }
  CFloat operator-() const { return {-re_, -im_}; }
  CFloat& operator+=(const CFloat& o) { return *this = *this + o; }
  CFloat& operator-=(const CFloat& o) { return *this = *this - o; }
  CFloat& operator*=(const CFloat& o) { return *this = *this * o; }
  CFloat& operator/=(const CFloat& o) { return *this = *this / o; }

  friend bool operator==(const CFloat& a, const CFloat& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const CFloat& a, const CFloat& b) { return !(a == b); }

  std::string str(long digits = 0) const {
    if (im_.is_zero()) return re_.str(digits);
    std::string s = re_.str(digits);
    s += im_.sign() < 0 ? " - " : " + ";
    return s + abs(im_).str(digits) + "*i";
  }

 private:
  BigFloat re_{};
  BigFloat im_{};
};

inline BigFloat abs(const CFloat& z) { return hypot(z.real(), z.imag()); }

inline CFloat conj(const CFloat& z) { return {z.real(), -z.imag()}; }

// Principal logarithm, Im in (-pi, pi].
inline CFloat log(const CFloat& z) {
  if (z.is_zero()) throw branch_error("log of zero");
  if (z.is_real() && z.real().sign() > 0) return CFloat(log(z.real()));
  return {log(abs(z)), atan2(z.imag(), z.real())};
}

inline CFloat exp(const CFloat& z) {
  BigFloat m = exp(z.real());
  if (z.is_real()) return CFloat(m);
  return {m * cos(z.imag()), m * sin(z.imag())};
}

inline CFloat sqrt(const CFloat& z) {
  if (z.is_zero()) return CFloat(0L);
  if (z.is_real() && z.real().sign() > 0) return CFloat(sqrt(z.real()));
  CFloat half_log = log(z);
  return exp(CFloat(half_log.real() / BigFloat(2L), half_log.imag() / BigFloat(2L)));
}

// z^n by binary powering; valid for any z, no branch cut involved.
inline CFloat pow(const CFloat& z, long n) {
  if (n == 0) return CFloat(1L);
  if (n < 0) return CFloat(1L) / pow(z, -n);
  CFloat base = z, acc(1L);
  unsigned long e = static_cast<unsigned long>(n);
  while (e) {
    if (e & 1UL) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

}  // namespace heunpb
