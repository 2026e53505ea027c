// tests/support/lattice_sums.hpp - second fast route for the floor power sums.
//
// The textbook "Euclid-like" recursion for
//   f = sum_{i=0..n} floor((a*i + b)/c)
//   g = sum_{i=0..n} i * floor((a*i + b)/c)
//   h = sum_{i=0..n} floor((a*i + b)/c)^2
// which swaps roles by counting lattice points under the line instead of using
// any of the library's reciprocity formulas. Lets tests cross-check 64-bit and
// larger instances where brute force is out of reach.
#pragma once

#include "recip/numeric.hpp"

namespace testsupport {

using recip::Integer;

struct LatticeSums {
  Integer f, g, h;
};

inline LatticeSums lattice_sums(const Integer& a, const Integer& b, const Integer& c,
                                const Integer& n) {
  if (a == 0) {
    Integer q = b / c;
    return {Integer((n + 1) * q), Integer(q * n * (n + 1) / 2), Integer((n + 1) * q * q)};
  }
  if (a >= c || b >= c) {
    Integer qa = a / c, qb = b / c;
    LatticeSums r = lattice_sums(Integer(a % c), Integer(b % c), c, n);
    Integer s1 = n * (n + 1) / 2;
    Integer s2 = n * (n + 1) * (2 * n + 1) / 6;
    LatticeSums out;
    out.f = r.f + qa * s1 + qb * (n + 1);
    out.g = r.g + qa * s2 + qb * s1;
    out.h = r.h + qa * qa * s2 + qb * qb * (n + 1) + 2 * qa * qb * s1 + 2 * qb * r.f + 2 * qa * r.g;
    return out;
  }
  Integer m = (a * n + b) / c;
  if (m == 0) return {0, 0, 0};
  LatticeSums r = lattice_sums(c, Integer(c - b - 1), a, Integer(m - 1));
  LatticeSums out;
  out.f = n * m - r.f;
  out.g = (m * n * (n + 1) - r.h - r.f) / 2;
  out.h = n * m * (m + 1) - 2 * r.g - 2 * r.f - out.f;
  return out;
}

/// Q, T2, T3 of (a, b; h) in the library's convention (i = 1..h).
inline LatticeSums instance_sums(const Integer& a, const Integer& b, const Integer& h) {
  return lattice_sums(b, 0, a, h);
}

}  // namespace testsupport
