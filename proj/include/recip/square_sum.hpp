// include/recip/square_sum.hpp - sums of squared fractional parts {i*b/a}^2.
//
// The recursion works on the combined quantity
//
//   S(a,b;h) = (a/2) * sum {i*b/a}^2 + (a/2 + 1) * sum floor(i*b/a),
//
// which satisfies S(a,b;h) + S(b,a;H) = eta2(a,b,h) for coprime a, b and
// h < a, and S(a,b;h) = S(a,r;h) + q*h*(h+1)*(a+2)/4 when b = q*a + r.
#pragma once

#include "recip/numeric.hpp"
#include "recip/trace.hpp"

namespace recip {

/// Every quantity entering one reciprocity step S(a,b;h) -> S(b,a;H).
struct ReciprocityTerms {
  Integer n0;     ///< -b(h+1) mod a
  Integer n;      ///< ab - a + n0, in [ab - a, ab)
  Integer n1;     ///< -n * a^{-1} mod b, taken in [1, b]
  Integer H;      ///< n1 - 1, the swapped bound
  Integer alpha;  ///< ab(a+b-2)/2
  Integer beta;   ///< ab(a-1)(b-1)/2 + ab((a-1)(a-2) + (b-1)(b-2))/3
  Rational gamma; ///< (2 alpha^2 - ab beta) / (2 (ab)^3)
  Rational eta1;
  Rational eta2;  ///< S(a,b;h) + S(b,a;H)
};

/// Requires a >= 2, b >= 1, gcd(a, b) = 1, h >= 0.
ReciprocityTerms reciprocity_terms(const Integer& a, const Integer& b, const Integer& h);

/// gamma(a,b) alone; symmetric in its arguments.
Rational reciprocity_gamma(const Integer& a, const Integer& b);

/// S(a,b;h). Requires a >= 1, b >= 0, h >= 0. Non-coprime pairs are
/// evaluated through their reduced form and reassembled with the given a.
Rational s_value(const Integer& a, const Integer& b, const Integer& h, Trace* trace = nullptr);

/// T1(a,b;h) = sum_{i=1..h} {i*b/a}^2 = (2S - (a+2)Q) / a.
/// When given, `trace` receives the S steps followed by the floor-sum steps.
Rational t1(const Integer& a, const Integer& b, const Integer& h, Trace* trace = nullptr);

/// sum_{i=1..h} (i*b mod a)^2 = a^2 * T1(a,b;h).
Integer remainder_square_sum(const Integer& a, const Integer& b, const Integer& h);

/// sum_{r=1..a-1} (r/a)^2, the value of T1 over one full period in h.
Rational full_period_t1(const Integer& a);

}  // namespace recip
