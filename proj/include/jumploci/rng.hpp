#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "jumploci/scalar.hpp"

namespace jumploci {

/* splitmix64 step, used to derive independent child seeds so that sample k
   sees the same random stream no matter how samples are assigned to
   threads. */
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/* Deterministic source of small exact scalars.  mt19937_64 has a fixed
   standard-specified output sequence, and only raw engine output is used
   below, so streams are reproducible across platforms. */
class Rng {
 public:
  static constexpr const char* kAlgorithm = "mt19937_64";

  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  /* Uniform-ish integer in [lo, hi] (slight modulo bias is irrelevant for
     test-point sampling). */
  long int_in(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  bool coin() { return next() & 1; }

  BigRat rational(long num_range = 9, long den_range = 4) {
    long num = int_in(-num_range, num_range);
    long den = int_in(1, den_range);
    return BigRat(num, den);
  }

  BigRat nonzero_rational(long num_range = 9, long den_range = 4) {
    long num = int_in(1, num_range) * (coin() ? 1 : -1);
    long den = int_in(1, den_range);
    return BigRat(num, den);
  }

  Scalar scalar(Field f, long num_range = 9, long den_range = 4) {
    if (f == Field::rational) return Scalar(rational(num_range, den_range));
    return Scalar(rational(num_range, den_range), rational(num_range, den_range));
  }

  Scalar nonzero_scalar(Field f, long num_range = 9, long den_range = 4) {
    if (f == Field::rational) return Scalar(nonzero_rational(num_range, den_range));
    // Nonzero real part guarantees a nonzero value.
    return Scalar(nonzero_rational(num_range, den_range), rational(num_range, den_range));
  }

  std::vector<Scalar> vector(std::size_t n, Field f) {
    std::vector<Scalar> v(n);
    for (auto& x : v) x = scalar(f);
    return v;
  }

  /* Random vector that is not the zero vector. */
  std::vector<Scalar> nonzero_vector(std::size_t n, Field f) {
    for (;;) {
      std::vector<Scalar> v = vector(n, f);
      for (const auto& x : v)
        if (!x.is_zero()) return v;
    }
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace jumploci
