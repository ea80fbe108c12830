#ifndef FACEKIT_RNG_HPP
#define FACEKIT_RNG_HPP

#include "facekit/rational.hpp"

#include <cstdint>
#include <random>

namespace facekit {

/// All randomized machinery draws from mt19937_64, whose sequence is fixed
/// by the standard, so identical seeds reproduce identical instances on
/// every platform.
using RngEngine = std::mt19937_64;

/// Splitmix64 combinator: derives the per-instance seed from a suite seed
/// and an instance index.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Rational with numerator in [num_lo, num_hi] and denominator in [1, den_hi].
Rat gen_rat(RngEngine& rng, long num_lo = -9, long num_hi = 9, long den_hi = 9);

/// Rational strictly inside (0, 1).
Rat gen_rat_open01(RngEngine& rng);

std::size_t gen_index(RngEngine& rng, std::size_t lo, std::size_t hi);  // inclusive

}  // namespace facekit

#endif
