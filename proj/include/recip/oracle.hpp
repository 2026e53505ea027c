// include/recip/oracle.hpp - direct enumeration of every quantity.
//
// Nothing here uses reciprocity; loops run over i = 1..h (or the lattice
// below n) so cost is linear in the bound. Use for h up to ~1e7.
#pragma once

#include "recip/cross_sum.hpp"
#include "recip/numeric.hpp"

namespace recip::oracle {

SumReport report(const Instance& inst);

/// S(a,b;h) assembled from report().
Rational s_value(const Integer& a, const Integer& b, const Integer& h);

struct Nonrep {
  Integer count;
  Integer sum;
};

/// Sieve over 0..ab-1. Requires coprime a, b >= 1.
Nonrep nonrep(const Integer& a, const Integer& b);

/// Counts (x, y, z, u) >= 0 with a*x + b*y + z + u = n.
Integer four_var(const Integer& a, const Integer& b, const Integer& n);

}  // namespace recip::oracle
