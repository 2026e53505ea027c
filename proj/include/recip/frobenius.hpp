// include/recip/frobenius.hpp - numbers not of the form a*x + b*y.
#pragma once

#include "recip/numeric.hpp"

namespace recip {

struct FrobeniusSummary {
  Integer a;
  Integer b;
  Integer nonrep_count;  ///< (a-1)(b-1)/2
  Integer nonrep_sum;    ///< (a-1)(b-1)(2ab-a-b-1)/12
};

/// How many n >= 0 have no representation a*x + b*y with x, y >= 0.
/// Requires coprime a, b >= 1.
Integer nonrep_count(const Integer& a, const Integer& b);

/// Sum of those n.
Integer nonrep_sum(const Integer& a, const Integer& b);

FrobeniusSummary frobenius_summary(const Integer& a, const Integer& b);

/// (n+1)(n+2)/2 + (a-1)(b-1)(2ab - a - b - 6n - 7)/12.
/// Counts the solutions of a*x + b*y + z + u = n only when every
/// nonrepresentable number is <= n, i.e. n >= ab - a - b (or a or b is 1).
Integer four_var_closed_form(const Integer& a, const Integer& b, const Integer& n);

/// Number of nonnegative solutions of a*x + b*y + z + u = n for 0 <= n < ab;
/// anything else throws OutOfDomain. Uses the closed form where it holds and
/// a direct sum over min(a,b) or fewer terms below the largest gap.
Integer four_var_count(const Integer& a, const Integer& b, const Integer& n);

}  // namespace recip
