// src/numeric.cpp
#include "recip/numeric.hpp"

#include <ostream>

namespace recip {

Integer parse_integer(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    digits.remove_prefix(1);
  }
  if (digits.empty()) {
    throw InvalidArgument("not an integer: '" + std::string(text) + "'");
  }
  for (char c : digits) {
    if (c < '0' || c > '9') {
      throw InvalidArgument("not an integer: '" + std::string(text) + "'");
    }
  }
  Integer value(std::string(digits), 10);
  if (text.front() == '-') value = -value;
  return value;
}

std::string to_string(const Integer& value) { return value.get_str(10); }

Rational::Rational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) throw InvalidArgument("rational with zero denominator");
  value_.get_num() = numerator;
  value_.get_den() = denominator;
  value_.canonicalize();
}

Integer Rational::to_integer(std::string_view what) const {
  if (!is_integer()) {
    throw InvariantViolation(std::string(what) + " is not integral: " + str());
  }
  return num();
}

Rational Rational::operator-() const {
  Rational out;
  out.value_ = -value_;
  return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.value_ == 0) throw InvalidArgument("division by zero rational");
  value_ /= rhs.value_;
  return *this;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  int c = cmp(lhs.value_, rhs.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const {
  if (is_integer()) return to_string(num());
  return to_string(num()) + "/" + to_string(den());
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw InvalidArgument("rational with zero denominator");
  return Rational(parse_integer(text.substr(0, slash)), std::move(den));
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.str(); }

ExtGcd ext_gcd(const Integer& x, const Integer& y) {
  if (x == 0 && y == 0) throw InvalidArgument("ext_gcd(0, 0) is undefined");
  ExtGcd r;
  mpz_gcdext(r.g.get_mpz_t(), r.u.get_mpz_t(), r.v.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return r;
}

Integer mod_inverse(const Integer& x, const Integer& m) {
  if (m < 1) throw InvalidArgument("modulus must be >= 1, got " + to_string(m));
  if (m == 1) return 0;
  Integer inv;
  if (mpz_invert(inv.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw NotInvertible(to_string(x) + " is not invertible modulo " + to_string(m));
  }
  return inv;
}

Integer floor_mod(const Integer& x, const Integer& m) {
  if (m < 1) throw InvalidArgument("modulus must be >= 1, got " + to_string(m));
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer floor_div(const Integer& x, const Integer& m) {
  if (m < 1) throw InvalidArgument("divisor must be >= 1, got " + to_string(m));
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return q;
}

Integer gcd(const Integer& x, const Integer& y) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return g;
}

Integer sum_first(const Integer& h) {
  if (h < 0) throw InvalidArgument("sum bound must be >= 0, got " + to_string(h));
  return Integer(h * (h + 1) / 2);
}

Integer sum_squares(const Integer& h) {
  if (h < 0) throw InvalidArgument("sum bound must be >= 0, got " + to_string(h));
  return Integer(h * (h + 1) * (2 * h + 1) / 6);
}

Integer exact_div(const Integer& x, const Integer& d, std::string_view what) {
  if (!mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t())) {
    throw InvariantViolation(std::string(what) + ": " + to_string(x) + " not divisible by " +
                             to_string(d));
  }
  Integer q;
  mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
  return q;
}

std::size_t euclid_steps(Integer x, Integer y) {
  x = abs(x);
  y = abs(y);
  std::size_t steps = 0;
  while (y != 0) {
    Integer r = x % y;
    x = std::move(y);
    y = std::move(r);
    ++steps;
  }
  return steps;
}

}  // namespace recip
