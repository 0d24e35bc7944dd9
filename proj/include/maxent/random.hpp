#pragma once

#include <cstddef>
#include <cstdint>

#include "maxent/gaussian.hpp"
#include "maxent/state.hpp"

namespace maxent {

/// 64-bit linear congruential generator, x' = a x + c mod 2^64 with
/// a = 6364136223846793005, c = 1442695040888963407 (Knuth, MMIX).
/// The state is advanced once before every draw; draws use the high bits.
class Lcg64 {
 public:
  static constexpr std::uint64_t kMultiplier = 6364136223846793005ULL;
  static constexpr std::uint64_t kIncrement = 1442695040888963407ULL;

  explicit Lcg64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ = state_ * kMultiplier + kIncrement;
    return state_;
  }
  /// Uniform integer in [0, 2^bits), 1 <= bits <= 64.
  std::uint64_t bits(unsigned n) { return n >= 64 ? next() : next() >> (64 - n); }

 private:
  std::uint64_t state_;
};

/// Sign, numerator, denominator drawn in that order. Numerator and
/// denominator are uniform `bits`-bit integers with 0 mapped to 1, so every
/// value is nonzero.
BigRational random_rational(Lcg64& rng, unsigned bits);

/// Real part then imaginary part.
GaussianRational random_gaussian(Lcg64& rng, unsigned bits);

/// Dense d_A x d_B state, entries drawn row-major.
BipartiteState random_state(Lcg64& rng, std::size_t dim_a, std::size_t dim_b, unsigned bits);

}  // namespace maxent
