// include/recip/cross_sum.hpp - sums of i*floor(i*b/a) and floor(i*b/a)^2.
#pragma once

#include "recip/instance.hpp"
#include "recip/numeric.hpp"
#include "recip/trace.hpp"

namespace recip {

/// Every sum over i = 1..h for one instance, with q_i = floor(i*b/a) and
/// r_i = i*b - a*q_i.
struct SumReport {
  Instance instance;
  Integer q_sum;   ///< sum q_i
  Integer r_sum;   ///< sum r_i
  Integer r2_sum;  ///< sum r_i^2
  Rational t1;     ///< sum {i*b/a}^2
  Integer t2;      ///< sum i*q_i
  Integer t3;      ///< sum q_i^2
  Integer ir_sum;  ///< sum i*r_i
  Integer qr_sum;  ///< sum q_i*r_i
  Rational s;      ///< (a/2)*t1 + (a/2 + 1)*q_sum

  friend bool operator==(const SumReport&, const SumReport&) = default;
};

/// True when the division-algorithm identities tying the fields together hold:
/// b*sum(i) = a*q_sum + r_sum, b*sum(i^2) = a*t2 + ir_sum,
/// qr_sum = b*t2 - a*t3, r2_sum = a^2*t1, and the definition of s.
bool satisfies_identities(const SumReport& report);

/// T2(a,b;h) = sum_{i=1..h} i*floor(i*b/a).
///
/// For a > b each level applies
///   T2(a,b;h) + (a/b) T2(b,a;h') = a h h'^2/(2b) + (a/(2b)) Q(b,a;h')
///                                  - (a/(2b)) T1(a,b;h) + b h(h+1)(2h+1)/(12a)
/// with h' = floor(b*h/a), evaluating T1 and Q afresh at that level; b >= a
/// is reduced by T2(a,b;h) = T2(a,b mod a;h) + floor(b/a) * (1^2+..+h^2).
/// The trace lists the T2 levels; nested T1/Q steps land in `substeps`.
Integer t2(const Integer& a, const Integer& b, const Integer& h, Trace* trace = nullptr);

/// T3(a,b;h) = T1 + (2b/a) T2 - b^2 h(h+1)(2h+1) / (6a^2).
Integer t3(const Integer& a, const Integer& b, const Integer& h);

/// T3 by counting how many i share each quotient:
///   T3(a,b;h) = h h'^2 - 2 T2(b,a;h') + Q(b,a;h'),  h' = floor(b*h/a),
/// plus b*J*(J+1) - J with J = floor(h'/b), which is zero while h < a.
/// Requires a > b >= 1 after gcd reduction.
Integer t3_alt(const Integer& a, const Integer& b, const Integer& h);

SumReport full_report(const Instance& inst);

}  // namespace recip
