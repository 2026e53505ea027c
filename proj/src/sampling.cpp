// src/sampling.cpp
#include "recip/sampling.hpp"

namespace recip {

Integer random_integer(std::mt19937_64& rng, const Integer& lo, const Integer& hi) {
  if (hi < lo) throw InvalidArgument("empty random range");
  Integer span = hi - lo + 1;
  // 64 extra bits keep the modulo bias negligible.
  std::size_t words = mpz_sizeinbase(span.get_mpz_t(), 2) / 64 + 2;
  Integer raw = 0;
  for (std::size_t i = 0; i < words; ++i) {
    raw <<= 64;
    std::uint64_t w = rng();
    raw += Integer(static_cast<unsigned long>(w >> 32)) << 32;
    raw += static_cast<unsigned long>(w & 0xffffffffu);
  }
  return lo + Integer(raw % span);
}

Instance random_coprime_instance(std::mt19937_64& rng, unsigned bits) {
  if (bits < 2) throw InvalidArgument("bits must be >= 2");
  Integer top = Integer(1) << (bits - 1);
  Integer a = random_integer(rng, top, Integer((top << 1) - 1));
  Integer b;
  do {
    b = random_integer(rng, 1, Integer(a - 1));
  } while (gcd(a, b) != 1);
  Integer h = random_integer(rng, 1, Integer(a - 1));
  return {a, b, h};
}

}  // namespace recip
