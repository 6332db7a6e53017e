#pragma once

// Shared helpers for the test suites.

#include <initializer_list>
#include <vector>

#include "heunpb/poly.hpp"
#include "heunpb/util.hpp"

namespace heunpb::testing {

inline Rational q(long n, long d = 1) { return Rational(n, d); }

inline Poly poly(std::initializer_list<long> ints) {
  std::vector<Rational> c;
  for (long v : ints) c.emplace_back(v);
  return Poly(std::move(c));
}

inline double rel_err(const CFloat& got, const CFloat& want) {
  BigFloat scale = max(abs(got), abs(want));
  if (scale.is_zero()) return 0.0;
  return (abs(got - want) / scale).to_double();
}

// random rational with |value| <= max_num, denominator <= max_den
inline Rational random_rational(SplitMix64& rng, long max_num, long max_den) {
  long d = rng.range(1, max_den);
  long n = rng.range(-max_num * d, max_num * d);
  return Rational(n, d);
}

// random rational strictly inside (lo, hi), on a grid of 2^20 steps
inline Rational random_in(SplitMix64& rng, const Rational& lo, const Rational& hi) {
  long k = rng.range(1, (1 << 20) - 1);
  return lo + (hi - lo) * Rational(k, 1 << 20);
}

}  // namespace heunpb::testing
