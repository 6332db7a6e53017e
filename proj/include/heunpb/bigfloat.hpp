#pragma once

// Arbitrary-precision binary floating point on top of MPFR.  A thread-local
// working precision (set with the Precision RAII guard, in decimal digits)
// controls the precision of every newly produced value; basic operations are
// correctly rounded by MPFR (round to nearest, ties to even).  The default
// working precision is 50 decimal digits; at 15 digits the mantissa is close
// to a machine double, which serves as the fast path.

#include <gmp.h>
#include <mpfr.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include "heunpb/util.hpp"

namespace heunpb {

inline long digits_to_bits(long digits) {
  // ceil(digits * log2(10)) plus guard bits for accumulated rounding
  return static_cast<long>(digits * 3.3219280948873626) + 24;
}

namespace detail {
inline long& current_bits() {
  thread_local long bits = digits_to_bits(50);
  return bits;
}
inline long& current_digits() {
  thread_local long digits = 50;
  return digits;
}
}  // namespace detail

// Scoped working precision in decimal digits.
class Precision {
 public:
  explicit Precision(long decimal_digits)
      : saved_bits_(detail::current_bits()), saved_digits_(detail::current_digits()) {
    if (decimal_digits < 2) throw std::invalid_argument("Precision: need at least 2 digits");
    detail::current_bits() = digits_to_bits(decimal_digits);
    detail::current_digits() = decimal_digits;
  }
  ~Precision() {
    detail::current_bits() = saved_bits_;
    detail::current_digits() = saved_digits_;
  }
  Precision(const Precision&) = delete;
  Precision& operator=(const Precision&) = delete;

  static long bits() { return detail::current_bits(); }
  static long digits() { return detail::current_digits(); }

 private:
  long saved_bits_;
  long saved_digits_;
};

class BigFloat {
 public:
  BigFloat() {
    mpfr_init2(v_, Precision::bits());
    mpfr_set_zero(v_, 1);
  }
  BigFloat(double d) {
    mpfr_init2(v_, Precision::bits());
    mpfr_set_d(v_, d, MPFR_RNDN);
  }
  BigFloat(long n) {
    mpfr_init2(v_, Precision::bits());
    mpfr_set_si(v_, n, MPFR_RNDN);
  }
  BigFloat(int n) : BigFloat(static_cast<long>(n)) {}

  BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  static BigFloat from_mpq(mpq_srcptr q) {
    BigFloat r;
    mpfr_set_q(r.v_, q, MPFR_RNDN);
    return r;
  }
  static BigFloat from_mpz(mpz_srcptr z) {
    BigFloat r;
    mpfr_set_z(r.v_, z, MPFR_RNDN);
    return r;
  }
  // Parses a decimal string at the current working precision.
  static BigFloat parse(const std::string& s) {
    BigFloat r;
    if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
      throw std::invalid_argument("BigFloat: cannot parse '" + s + "'");
    return r;
  }

  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat r;
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat r;
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat r;
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    BigFloat r;
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  BigFloat operator-() const {
    BigFloat r;
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }
  BigFloat& operator+=(const BigFloat& o) { return *this = *this + o; }
  BigFloat& operator-=(const BigFloat& o) { return *this = *this - o; }
  BigFloat& operator*=(const BigFloat& o) { return *this = *this * o; }
  BigFloat& operator/=(const BigFloat& o) { return *this = *this / o; }

  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend bool operator!=(const BigFloat& a, const BigFloat& b) { return !(a == b); }
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }

  // "-d.ddd...e±XX"; deterministic for a given value and digit count.
  std::string str(long digits = 0) const {
    if (digits <= 0) digits = Precision::digits();
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return sign() < 0 ? "-inf" : "inf";
    if (is_zero()) return "0";
    mpfr_exp_t e;
    char* raw = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), v_, MPFR_RNDN);
    std::string digits_str(raw);
    mpfr_free_str(raw);
    std::string sign_str;
    if (!digits_str.empty() && digits_str[0] == '-') {
      sign_str = "-";
      digits_str.erase(0, 1);
    }
    std::string out = sign_str + digits_str.substr(0, 1);
    if (digits_str.size() > 1) out += "." + digits_str.substr(1);
    out += "e" + std::to_string(static_cast<long>(e) - 1);
    return out;
  }

 private:
  mpfr_t v_;
};

inline BigFloat abs(const BigFloat& a) {
  BigFloat r;
  mpfr_abs(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline BigFloat sqrt(const BigFloat& a) {
  if (a.sign() < 0) throw branch_error("sqrt of negative real");
  BigFloat r;
  mpfr_sqrt(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline BigFloat exp(const BigFloat& a) {
  BigFloat r;
  mpfr_exp(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline BigFloat log(const BigFloat& a) {
  if (a.sign() <= 0) throw branch_error("log of non-positive real");
  BigFloat r;
  mpfr_log(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline BigFloat sin(const BigFloat& a) {
  BigFloat r;
  mpfr_sin(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline BigFloat cos(const BigFloat& a) {
  BigFloat r;
  mpfr_cos(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline BigFloat atan2(const BigFloat& y, const BigFloat& x) {
  BigFloat r;
  mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
  return r;
}
inline BigFloat hypot(const BigFloat& x, const BigFloat& y) {
  BigFloat r;
  mpfr_hypot(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return r;
}
inline BigFloat pow(const BigFloat& a, long n) {
  BigFloat r;
  mpfr_pow_si(r.raw(), a.raw(), n, MPFR_RNDN);
  return r;
}
inline BigFloat pi() {
  BigFloat r;
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}
// 10^-n at current precision
inline BigFloat pow10(long n) {
  BigFloat r;
  mpfr_ui_pow_ui(r.raw(), 10, static_cast<unsigned long>(n < 0 ? -n : n), MPFR_RNDN);
  if (n < 0) mpfr_si_div(r.raw(), 1, r.raw(), MPFR_RNDN);
  return r;
}
inline BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }
inline BigFloat min(const BigFloat& a, const BigFloat& b) { return a < b ? a : b; }

}  // namespace heunpb
