// src/square_sum.cpp
#include "recip/square_sum.hpp"

#include "recip/floor_sum.hpp"
#include "recip/instance.hpp"

namespace recip {

namespace {

void require_coprime_pair(const Integer& a, const Integer& b, const Integer& h) {
  if (a < 2) throw InvalidArgument("reciprocity needs a >= 2, got " + to_string(a));
  if (b < 1) throw InvalidArgument("reciprocity needs b >= 1, got " + to_string(b));
  if (h < 0) throw InvalidArgument("h must be >= 0, got " + to_string(h));
  if (gcd(a, b) != 1) {
    throw InvalidArgument("reciprocity needs coprime a, b; got " + to_string(a) + ", " +
                          to_string(b));
  }
}

Integer beta_of(const Integer& a, const Integer& b) {
  Integer ab = a * b;
  Integer six_beta = 3 * ab * (a - 1) * (b - 1) + 2 * ab * ((a - 1) * (a - 2) + (b - 1) * (b - 2));
  return exact_div(six_beta, 6, "beta");
}

Integer alpha_of(const Integer& a, const Integer& b) {
  return exact_div(Integer(a * b * (a + b - 2)), 2, "alpha");
}

Rational gamma_of(const Integer& alpha, const Integer& beta, const Integer& ab) {
  Integer ab3 = ab * ab * ab;
  return Rational(Integer(2 * alpha * alpha - ab * beta), Integer(2 * ab3));
}

}  // namespace

Rational reciprocity_gamma(const Integer& a, const Integer& b) {
  if (a < 1 || b < 1) throw InvalidArgument("gamma needs a, b >= 1");
  return gamma_of(alpha_of(a, b), beta_of(a, b), Integer(a * b));
}

ReciprocityTerms reciprocity_terms(const Integer& a, const Integer& b, const Integer& h) {
  require_coprime_pair(a, b, h);
  ReciprocityTerms t;
  const Integer ab = a * b;

  t.n0 = floor_mod(Integer(-b * (h + 1)), a);
  t.n = ab - a + t.n0;
  t.n1 = floor_mod(Integer(-t.n * mod_inverse(a, b)), b);
  // b | n leaves remainder 0; the identity needs the representative b there.
  if (t.n1 == 0) t.n1 = b;
  t.H = t.n1 - 1;

  t.alpha = alpha_of(a, b);
  t.beta = beta_of(a, b);
  t.gamma = gamma_of(t.alpha, t.beta, ab);

  const Integer& n = t.n;
  const Integer& H = t.H;
  // Every term of eta1 has a denominator dividing 12(ab)^3; accumulate the
  // scaled numerator and normalize once.
  const Integer ab2 = ab * ab;
  const Integer ab3 = ab2 * ab;
  const Integer denom = 12 * ab3;
  Integer num = denom * (h + H + 1);
  num += 6 * n * (2 * t.alpha * t.alpha - ab * t.beta);
  num += 3 * ab2 * n * (n + 3) * (a + b - 2);
  num += 2 * ab2 * (n * n * n + 6 * n * n + 11 * n);
  num += ab2 * b * (h + 1) * (a - 1) * (a - 5);
  num += ab2 * a * (H + 1) * (b - 1) * (b - 5);
  num -= 3 * ab2 * b * b * h * (h + 1) * (a + 2);
  num -= 3 * ab2 * a * a * H * (H + 1) * (b + 2);
  t.eta1 = Rational(num, denom);

  Integer lattice = 6 * (n + 1) * (n + 2) + (a - 1) * (b - 1) * (2 * ab - a - b - 6 * n - 7);
  t.eta2 = Rational(Integer(lattice * ab3 - num), denom);
  return t;
}

Rational full_period_t1(const Integer& a) {
  if (a < 1) throw InvalidArgument("a must be >= 1, got " + to_string(a));
  return Rational(Integer((a - 1) * (2 * a - 1)), Integer(6 * a));
}

Rational s_value(const Integer& a0, const Integer& b0, const Integer& h0, Trace* trace) {
  const Instance given{a0, b0, h0};
  const Instance reduced = given.normalized();
  if (reduced.a != given.a) {
    // S is not scale invariant in a; reassemble from the invariant sums.
    Rational value = Rational(given.a, 2) * t1(a0, b0, h0) +
                     Rational(Integer(given.a + 2), 2) * Rational(floor_sum(reduced));
    if (trace) {
      trace->add({Rule::base, a0, b0, h0, {{"g", Integer(given.a / reduced.a)}}, value});
    }
    return value;
  }

  Integer a = reduced.a, b = reduced.b, h = reduced.h;
  Rational acc;
  int sign = 1;
  auto record = [&](Rule rule, std::vector<std::pair<std::string, Integer>> derived,
                    const Rational& amount) {
    if (trace) trace->add({rule, a, b, h, std::move(derived), amount});
  };

  while (true) {
    if (h == 0 || b == 0) {
      record(Rule::base, {}, 0);
      break;
    }
    if (a == 1) {
      // Fractional parts vanish: S = (3/2) * b * (1+..+h).
      Rational amount = Rational(Integer(3 * b * sum_first(h)), 2) * sign;
      record(Rule::base, {}, amount);
      acc += amount;
      break;
    }
    if (b >= a) {
      Integer q = b / a;
      Integer r = b % a;
      Rational amount = Rational(Integer(q * h * (h + 1) * (a + 2)), 4) * sign;
      record(Rule::division, {{"q", q}, {"r", r}}, amount);
      acc += amount;
      b = std::move(r);
      continue;
    }
    if (h >= a) {
      Integer blocks = h / a;
      Integer m = h % a;
      Integer floor_delta = a * b * blocks * (blocks - 1) / 2 +
                            blocks * full_period_floor_sum(a, b) + blocks * b * m;
      Rational amount = Rational(Integer(blocks * (a - 1) * (2 * a - 1)), 12) +
                        Rational(Integer((a + 2) * floor_delta), 2);
      amount *= sign;
      record(Rule::period_reduction, {{"Q", blocks}, {"m", m}}, amount);
      acc += amount;
      h = std::move(m);
      continue;
    }
    if (b == 1) {
      // h < a: every floor is zero, so S = (1^2 + .. + h^2) / (2a).
      Rational amount = Rational(sum_squares(h), Integer(2 * a)) * sign;
      record(Rule::base, {}, amount);
      acc += amount;
      break;
    }
    ReciprocityTerms terms = reciprocity_terms(a, b, h);
    Rational amount = terms.eta2 * sign;
    record(Rule::reciprocity, {{"n0", terms.n0}, {"n", terms.n}, {"n1", terms.n1}, {"H", terms.H}},
           amount);
    acc += amount;
    sign = -sign;
    std::swap(a, b);
    h = std::move(terms.H);
  }
  return acc;
}

Rational t1(const Integer& a, const Integer& b, const Integer& h, Trace* trace) {
  const Instance reduced = Instance{a, b, h}.normalized();
  const Integer& ra = reduced.a;
  Rational s = s_value(ra, reduced.b, reduced.h, trace);
  Integer q = floor_sum(reduced, trace);
  return (Rational(2) * s - Rational(Integer((ra + 2) * q))) / Rational(ra);
}

Integer remainder_square_sum(const Integer& a, const Integer& b, const Integer& h) {
  Rational value = Rational(Integer(a * a)) * t1(a, b, h);
  return value.to_integer("sum of squared remainders");
}

}  // namespace recip
