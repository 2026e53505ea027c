// include/recip/instance.hpp
#pragma once

#include "recip/numeric.hpp"

namespace recip {

/// A summation problem over i = 1..h of floor(i*b/a).
struct Instance {
  Integer a;  ///< modulus, >= 1
  Integer b;  ///< multiplier, >= 0
  Integer h;  ///< summation bound, >= 0

  /// Throws InvalidArgument unless a >= 1, b >= 0, h >= 0.
  void validate() const;

  bool coprime() const { return gcd(a, b) == 1; }

  /// Divides a and b by gcd(a, b). floor(i*b/a) is unchanged by this.
  Instance normalized() const;

  friend bool operator==(const Instance&, const Instance&) = default;
};

}  // namespace recip
