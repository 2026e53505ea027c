// include/recip/sampling.hpp - seeded random instances for sweeps and benchmarks.
#pragma once

#include "recip/instance.hpp"

#include <random>

namespace recip {

/// Uniform-ish integer in [lo, hi] built from 64-bit draws.
Integer random_integer(std::mt19937_64& rng, const Integer& lo, const Integer& hi);

/// a has exactly `bits` bits, b in [1, a) coprime to a, h in [1, a).
/// Requires bits >= 2.
Instance random_coprime_instance(std::mt19937_64& rng, unsigned bits);

}  // namespace recip
