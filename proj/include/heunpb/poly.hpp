#pragma once

// Dense univariate polynomials over Rational, coefficients lowest degree
// first, no trailing zeros (the zero polynomial is the empty list).
//
// gcd clears denominators and runs a primitive polynomial-remainder sequence
// over the integers, which keeps coefficient growth under control.
// Squarefree decomposition is Yun's algorithm; no factorization into
// irreducibles happens anywhere, multiplicity structure is enough.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "heunpb/rational.hpp"

namespace heunpb {

template <class T>
inline T to_scalar(const Rational& r) {
  return T(r);
}
template <>
inline Rational to_scalar<Rational>(const Rational& r) {
  return r;
}
template <>
inline BigFloat to_scalar<BigFloat>(const Rational& r) {
  return r.to_float();
}
template <>
inline CFloat to_scalar<CFloat>(const Rational& r) {
  return CFloat(r.to_float());
}

class Poly {
 public:
  Poly() = default;
  Poly(const Rational& c) : c_{c} { trim(); }
  Poly(long c) : Poly(Rational(c)) {}
  Poly(int c) : Poly(Rational(c)) {}
  explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly x() { return Poly(std::vector<Rational>{Rational(0), Rational(1)}); }
  static Poly monomial(const Rational& c, int k) {
    std::vector<Rational> v(static_cast<size_t>(k) + 1, Rational(0));
    v.back() = c;
    return Poly(std::move(v));
  }
  // a + b*x
  static Poly linear(const Rational& a, const Rational& b) {
    return Poly(std::vector<Rational>{a, b});
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[static_cast<size_t>(k)] : Rational(0);
  }
  Rational leading() const { return is_zero() ? Rational(0) : c_.back(); }
  Rational constant() const { return coeff(0); }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return Poly(std::move(r));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
    return Poly(std::move(r));
  }
  Poly operator-() const {
    std::vector<Rational> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
    return Poly(std::move(r));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(r));
  }
  friend Poly operator*(const Rational& s, const Poly& p) {
    if (s.is_zero()) return Poly();
    std::vector<Rational> r(p.c_.size());
    for (size_t i = 0; i < p.c_.size(); ++i) r[i] = s * p.c_[i];
    return Poly(std::move(r));
  }
  friend Poly operator*(const Poly& p, const Rational& s) { return s * p; }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // Field division: returns (quotient, remainder) with deg rem < deg divisor.
  std::pair<Poly, Poly> divmod(const Poly& d) const {
    if (d.is_zero()) throw std::invalid_argument("Poly: division by zero polynomial");
    Poly rem = *this;
    if (degree() < d.degree()) return {Poly(), rem};
    std::vector<Rational> q(static_cast<size_t>(degree() - d.degree()) + 1, Rational(0));
    Rational lead_inv = d.leading().inverse();
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
      int k = rem.degree() - d.degree();
      Rational f = rem.leading() * lead_inv;
      q[static_cast<size_t>(k)] = f;
      rem -= Poly::monomial(f, k) * d;
    }
    return {Poly(std::move(q)), rem};
  }

  Poly exact_div(const Poly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw std::invalid_argument("Poly: exact division has a remainder");
    return q;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rational> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = Rational(static_cast<long>(i)) * c_[i];
    return Poly(std::move(r));
  }

  Poly pow(int e) const {
    if (e < 0) throw std::invalid_argument("Poly: negative power");
    Poly acc(Rational(1)), base = *this;
    while (e) {
      if (e & 1) acc *= base;
      if (e >>= 1) base *= base;
    }
    return acc;
  }

  template <class T>
  T operator()(const T& x) const {
    T acc = to_scalar<T>(Rational(0));
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + to_scalar<T>(c_[i]);
    return acc;
  }

  Poly compose(const Poly& inner) const {
    Poly acc;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * inner + Poly(c_[i]);
    return acc;
  }

  Poly monic() const {
    if (is_zero()) return *this;
    return leading().inverse() * *this;
  }

  // Clears denominators: p == scale * z where z has integer coefficients,
  // content 1 and positive leading coefficient.
  std::pair<std::vector<Int>, Rational> integer_form() const {
    if (is_zero()) return {{}, Rational(1)};
    Int den_lcm(1);
    for (const auto& c : c_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
    std::vector<Int> z(c_.size());
    Int content(0);
    for (size_t i = 0; i < c_.size(); ++i) {
      z[i] = c_[i].num() * (den_lcm / c_[i].den());
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z[i].get_mpz_t());
    }
    if (content == 0) content = 1;
    if (z.back() < 0) content = -content;
    for (auto& v : z) v /= content;
    return {std::move(z), Rational(content, den_lcm)};
  }

  int root_multiplicity(const Rational& r) const {
    if (is_zero()) throw std::invalid_argument("Poly: zero polynomial");
    Poly lin = Poly::linear(-r, Rational(1));
    Poly p = *this;
    int m = 0;
    while (p.degree() >= 1) {
      auto [q, rem] = p.divmod(lin);
      if (!rem.is_zero()) break;
      ++m;
      p = q;
    }
    return m;
  }

  std::string str(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      std::string term = c_[i].str();
      if (i > 0) {
        term = (c_[i].is_one() ? "" : (c_[i] == Rational(-1) ? "-" : term + "*"));
        term += var;
        if (i > 1) term += "^" + std::to_string(i);
      }
      if (out.empty())
        out = term;
      else
        out += (term[0] == '-') ? " - " + term.substr(1) : " + " + term;
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<Rational> c_;
};

namespace detail {

inline void ipoly_trim(std::vector<Int>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Int ipoly_content(const std::vector<Int>& p) {
  Int g(0);
  for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g == 0 ? Int(1) : g;
}

inline void ipoly_make_primitive(std::vector<Int>& p) {
  Int c = ipoly_content(p);
  if (!p.empty() && p.back() < 0) c = -c;
  for (auto& v : p) v /= c;
}

// Pseudo-remainder: repeatedly scales by the divisor's leading coefficient so
// every step stays over the integers.
inline std::vector<Int> ipoly_prem(std::vector<Int> a, const std::vector<Int>& b) {
  const Int& lb = b.back();
  while (a.size() >= b.size()) {
    Int la = a.back();
    size_t shift = a.size() - b.size();
    for (auto& v : a) v *= lb;
    for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= la * b[i];
    ipoly_trim(a);
    if (a.empty()) break;
  }
  return a;
}

}  // namespace detail

// gcd up to a constant; the result is returned with integer coefficients,
// content 1, positive leading coefficient.
inline Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) return Poly();
  auto to_ints = [](const Poly& p) {
    auto [z, scale] = p.integer_form();
    (void)scale;
    return z;
  };
  std::vector<Int> u = to_ints(a), v = to_ints(b);
  if (u.empty()) u.swap(v);
  while (!v.empty()) {
    std::vector<Int> r = detail::ipoly_prem(u, v);
    detail::ipoly_make_primitive(r);
    u.swap(v);
    v.swap(r);
  }
  detail::ipoly_make_primitive(u);
  std::vector<Rational> out(u.size());
  for (size_t i = 0; i < u.size(); ++i) out[i] = Rational(u[i], Int(1));
  return Poly(std::move(out));
}

// Yun's squarefree decomposition: p = const * prod f_i^i with the f_i
// squarefree and pairwise coprime.  Factors come back primitive over the
// integers with positive leading coefficient.
inline std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree: zero input");
  std::vector<std::pair<Poly, int>> out;
  if (p.is_constant()) return out;
  Poly f = p;
  Poly fp = f.derivative();
  Poly u = gcd(f, fp);
  Poly v = f.exact_div(u);
  Poly w = fp.exact_div(u);
  int i = 1;
  while (v.degree() > 0) {
    Poly z = w - v.derivative();
    Poly h = gcd(v, z);
    if (h.degree() > 0) out.emplace_back(h, i);
    v = v.exact_div(h);
    w = z.exact_div(h);
    ++i;
  }
  return out;
}

// Multiset of root multiplicities (over the complex numbers) of p, plus an
// entry (target_degree - deg p) for the point at infinity when positive.
// Sorted descending.
inline std::vector<int> multiplicity_profile(const Poly& p, int target_degree) {
  if (p.is_zero()) throw std::invalid_argument("multiplicity_profile: zero input");
  if (target_degree < p.degree())
    throw std::invalid_argument("multiplicity_profile: target degree below polynomial degree");
  std::vector<int> profile;
  for (const auto& [factor, mult] : squarefree_decomposition(p))
    profile.insert(profile.end(), static_cast<size_t>(factor.degree()), mult);
  if (target_degree > p.degree()) profile.push_back(target_degree - p.degree());
  std::sort(profile.rbegin(), profile.rend());
  return profile;
}

}  // namespace heunpb
