// include/recip/numeric.hpp - exact integers, rationals and elementary number theory.
#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace recip {

/// Arbitrary-precision signed integer. Every count, bound and integer-valued
/// sum in the library is carried in this type.
using Integer = mpz_class;

// Error taxonomy. Callers at the CLI boundary map these onto exit codes.
struct InvalidArgument : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotInvertible : std::domain_error {
  using std::domain_error::domain_error;
};
struct OutOfDomain : std::out_of_range {
  using std::out_of_range::out_of_range;
};
/// Raised when an algebraic identity the algorithms rely on fails at runtime
/// (a non-integral value where an integer must come out, for instance).
struct InvariantViolation : std::logic_error {
  using std::logic_error::logic_error;
};

/// Parses an optionally signed decimal string. Rejects anything else,
/// including surrounding whitespace.
Integer parse_integer(std::string_view text);
std::string to_string(const Integer& value);

/// Exact fraction, always held in lowest terms with a positive denominator.
/// Zero is 0/1. Backed by GMP's mpq.
class Rational {
 public:
  Rational() = default;
  Rational(const Integer& value) : value_(value) {}  // NOLINT(implicit)
  Rational(long value) : value_(value) {}            // NOLINT(implicit)
  Rational(const Integer& numerator, const Integer& denominator);

  const Integer& num() const noexcept { return value_.get_num(); }
  const Integer& den() const noexcept { return value_.get_den(); }

  bool is_integer() const noexcept { return den() == 1; }
  /// Numerator of an integral value; throws InvariantViolation otherwise.
  /// `what` names the quantity in the error message.
  Integer to_integer(std::string_view what = "value") const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return lhs.value_ == rhs.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

  /// "num/den", or just "num" when the denominator is 1.
  std::string str() const;
  /// Accepts "p", "p/q" (q nonzero); the result is normalized.
  static Rational parse(std::string_view text);

 private:
  // mpq values are canonical after every arithmetic operation; the two-part
  // constructor canonicalizes explicitly.
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

struct ExtGcd {
  Integer g;
  Integer u;
  Integer v;
};

/// g = gcd(x, y) > 0 together with Bezout coefficients u*x + v*y = g.
ExtGcd ext_gcd(const Integer& x, const Integer& y);

/// Inverse of x modulo m in [0, m). Returns 0 for m == 1.
Integer mod_inverse(const Integer& x, const Integer& m);

/// Floored remainder: the representative of x modulo m in [0, m).
Integer floor_mod(const Integer& x, const Integer& m);

/// Floored quotient of x by a positive m.
Integer floor_div(const Integer& x, const Integer& m);

Integer gcd(const Integer& x, const Integer& y);

/// 1 + 2 + ... + h
Integer sum_first(const Integer& h);
/// 1^2 + 2^2 + ... + h^2
Integer sum_squares(const Integer& h);

/// Quotient x / d that must be exact; throws InvariantViolation otherwise.
Integer exact_div(const Integer& x, const Integer& d, std::string_view what);

/// Number of division steps the Euclidean algorithm performs on (x, y).
std::size_t euclid_steps(Integer x, Integer y);

}  // namespace recip
