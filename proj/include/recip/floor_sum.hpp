// include/recip/floor_sum.hpp - sums of floor(i*b/a) by quotient reciprocity.
#pragma once

#include "recip/instance.hpp"
#include "recip/trace.hpp"

namespace recip {

/// Q(a,b;h) = sum_{i=1..h} floor(i*b/a).
///
/// Runs the Euclid-like reduction iteratively: multipliers b >= a are split
/// off with the division algorithm, bounds h >= a are folded by periodicity,
/// and the remaining case (b < a, h < a) swaps to Q(b,a;K) with
/// K = floor(b*h/a) through Q(a,b;h) + Q(b,a;K) = h*K. Non-coprime inputs are
/// reduced by their gcd first.
Integer floor_sum(const Instance& inst, Trace* trace = nullptr);
Integer floor_sum(const Integer& a, const Integer& b, const Integer& h, Trace* trace = nullptr);

/// sum_{i=1..h} (i*b mod a) = b*(1+..+h) - a*Q(a,b;h).
Integer remainder_sum(const Instance& inst);

/// Closed form of sum_{i=1..a} floor(i*b/a) for coprime a, b.
Integer full_period_floor_sum(const Integer& a, const Integer& b);

}  // namespace recip
