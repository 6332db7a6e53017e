#pragma once

#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace heunpb {

// Numeric-domain failures: poles, branch cuts, convergence-policy violations.
// The CLI maps these to exit code 3; parameter misuse raises
// std::invalid_argument and maps to exit code 2.
struct numeric_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct pole_error : numeric_error {
  using numeric_error::numeric_error;
};
struct branch_error : numeric_error {
  using numeric_error::numeric_error;
};
struct convergence_error : numeric_error {
  using numeric_error::numeric_error;
};

// splitmix64; fixed algorithm so seeded runs are reproducible across
// platforms and standard-library versions.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, n)
  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

  // uniform in [lo, hi] inclusive
  long range(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::uint64_t state_;
};

class Stopwatch {
 public:
  Stopwatch() : start_(clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(clock::now() - start_).count();
  }

 private:
  using clock = std::chrono::steady_clock;
  clock::time_point start_;
};

}  // namespace heunpb
