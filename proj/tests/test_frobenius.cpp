// tests/test_frobenius.cpp
#include <doctest.h>

#include "recip/frobenius.hpp"
#include "recip/oracle.hpp"
#include "recip/square_sum.hpp"

#include <numeric>

using namespace recip;

TEST_CASE("nonrepresentable counts and sums") {
  CHECK(nonrep_count(3, 5) == 4);
  CHECK(nonrep_sum(3, 5) == 14);
  CHECK(nonrep_sum(2, 3) == 1);
  CHECK(nonrep_count(1, 9) == 0);
  CHECK(nonrep_sum(1, 9) == 0);
  CHECK(nonrep_count(8411, 2732) == 11483855);
  CHECK_THROWS_AS(nonrep_count(4, 6), InvalidArgument);
  CHECK_THROWS_AS(nonrep_sum(0, 3), InvalidArgument);

  auto summary = frobenius_summary(3, 5);
  CHECK(summary.nonrep_count == 4);
  CHECK(summary.nonrep_sum == 14);
}

TEST_CASE("four_var_count") {
  CHECK(four_var_count(2, 3, 5) == 16);
  CHECK(four_var_count(5, 3, 10) == 36);
  CHECK(four_var_count(7, 4, 0) == 1);
  CHECK(four_var_count(1, 1, 0) == 1);
  CHECK_THROWS_AS(four_var_count(2, 3, 6), OutOfDomain);
  CHECK_THROWS_AS(four_var_count(2, 3, -1), OutOfDomain);
  CHECK_THROWS_AS(four_var_count(2, 4, 1), InvalidArgument);
  // below the largest gap the closed form overcounts
  CHECK(four_var_count(7, 4, 0) == 1);
  CHECK(four_var_closed_form(7, 4, 0) == 58);
  CHECK(four_var_closed_form(7, 4, 28 - 11) == oracle::four_var(7, 4, 17));
}

TEST_CASE("closed forms match the sieve") {
  for (long a = 1; a <= 30; ++a) {
    for (long b = 1; b <= 30; ++b) {
      if (std::gcd(a, b) != 1) continue;
      auto slow = oracle::nonrep(a, b);
      CHECK(nonrep_count(a, b) == slow.count);
      CHECK(nonrep_sum(a, b) == slow.sum);
    }
  }
}

TEST_CASE("four_var_count matches enumeration below ab") {
  for (long a = 1; a <= 9; ++a) {
    for (long b = 1; b <= 9; ++b) {
      if (std::gcd(a, b) != 1) continue;
      for (long n = 0; n < a * b; ++n) {
        Integer slow = oracle::four_var(a, b, n);
        CHECK(four_var_count(a, b, n) == slow);
        if (n >= a * b - a - b) CHECK(four_var_closed_form(a, b, n) == slow);
      }
    }
  }
}

TEST_CASE("solution count splits into the two S values plus eta1") {
  for (long a = 2; a <= 15; ++a) {
    for (long b = 1; b <= 15; ++b) {
      if (std::gcd(a, b) != 1) continue;
      for (long h = 0; h < a; ++h) {
        auto t = reciprocity_terms(a, b, h);
        CHECK(Rational(four_var_count(a, b, t.n)) ==
              s_value(a, b, h) + s_value(b, a, t.H) + t.eta1);
      }
    }
  }
}
