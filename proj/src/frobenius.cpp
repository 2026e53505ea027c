// src/frobenius.cpp
#include "recip/frobenius.hpp"

namespace recip {

namespace {

void require_coprime(const Integer& a, const Integer& b) {
  if (a < 1 || b < 1) {
    throw InvalidArgument("a and b must be >= 1; got " + to_string(a) + ", " + to_string(b));
  }
  if (gcd(a, b) != 1) {
    throw InvalidArgument("a and b must be coprime; got " + to_string(a) + ", " + to_string(b));
  }
}

}  // namespace

Integer nonrep_count(const Integer& a, const Integer& b) {
  require_coprime(a, b);
  return exact_div(Integer((a - 1) * (b - 1)), 2, "nonrepresentable count");
}

Integer nonrep_sum(const Integer& a, const Integer& b) {
  require_coprime(a, b);
  return exact_div(Integer((a - 1) * (b - 1) * (2 * a * b - a - b - 1)), 12,
                   "nonrepresentable sum");
}

FrobeniusSummary frobenius_summary(const Integer& a, const Integer& b) {
  return {a, b, nonrep_count(a, b), nonrep_sum(a, b)};
}

Integer four_var_closed_form(const Integer& a, const Integer& b, const Integer& n) {
  require_coprime(a, b);
  Integer twelve_n = 6 * (n + 1) * (n + 2) + (a - 1) * (b - 1) * (2 * a * b - a - b - 6 * n - 7);
  return exact_div(twelve_n, 12, "four-variable solution count");
}

Integer four_var_count(const Integer& a, const Integer& b, const Integer& n) {
  require_coprime(a, b);
  if (n < 0 || n >= a * b) {
    throw OutOfDomain("four_var_count needs 0 <= n < ab; got n=" + to_string(n));
  }
  if (a == 1 || b == 1 || n >= a * b - a - b) return four_var_closed_form(a, b, n);

  // Some gap of the semigroup lies above n. Sum over the larger generator's
  // multiple; for each, the smaller generator and z + u fill m = n - big*x:
  //   sum_{y=0..k} (m - small*y + 1) = (k+1)(m+1) - small*k(k+1)/2.
  const Integer& big = a > b ? a : b;
  const Integer& small = a > b ? b : a;
  Integer count = 0;
  for (Integer m = n; m >= 0; m -= big) {
    Integer k = m / small;
    count += (k + 1) * (m + 1) - small * k * (k + 1) / 2;
  }
  return count;
}

}  // namespace recip
