// src/cross_sum.cpp
#include "recip/cross_sum.hpp"

#include "recip/floor_sum.hpp"
#include "recip/square_sum.hpp"

namespace recip {

namespace {

// T2 for h < a (b arbitrary), scaled by `coef`; coprime input.
Rational t2_scaled(Integer a, Integer b, Integer h, Rational coef, Trace* trace) {
  Rational acc;
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
      Rational amount = coef * Rational(Integer(b * sum_squares(h)));
      record(Rule::base, {}, amount);
      acc += amount;
      break;
    }
    if (b >= a) {
      Integer q = b / a;
      Integer r = b % a;
      Rational amount = coef * Rational(Integer(q * sum_squares(h)));
      record(Rule::division, {{"q", q}, {"r", r}}, amount);
      acc += amount;
      b = std::move(r);
      continue;
    }
    Integer hp = b * h / a;
    Trace nested;
    Trace* nested_sink = trace ? &nested : nullptr;
    Rational level_t1 = t1(a, b, h, nested_sink);
    Integer swapped_q = floor_sum(b, a, hp, nested_sink);
    if (trace) trace->substeps += nested.total_steps();

    const Rational a_over_2b(a, Integer(2 * b));
    Rational rhs = Rational(Integer(a * h * hp * hp), Integer(2 * b));
    rhs += a_over_2b * Rational(swapped_q);
    rhs -= a_over_2b * level_t1;
    rhs += Rational(Integer(b * 2 * sum_squares(h)), Integer(4 * a));
    Rational amount = coef * rhs;
    record(Rule::reciprocity, {{"h'", hp}}, amount);
    acc += amount;

    coef *= -Rational(a, b);
    std::swap(a, b);
    h = std::move(hp);
  }
  return acc;
}

}  // namespace

bool satisfies_identities(const SumReport& rep) {
  const auto& [a, b, h] = rep.instance;
  if (b * sum_first(h) != a * rep.q_sum + rep.r_sum) return false;
  if (b * sum_squares(h) != a * rep.t2 + rep.ir_sum) return false;
  if (rep.qr_sum != b * rep.t2 - a * rep.t3) return false;
  if (Rational(rep.r2_sum) != Rational(Integer(a * a)) * rep.t1) return false;
  Rational s = Rational(a, 2) * rep.t1 + Rational(Integer(a + 2), 2) * Rational(rep.q_sum);
  return s == rep.s;
}

Integer t2(const Integer& a0, const Integer& b0, const Integer& h0, Trace* trace) {
  const Instance inst = Instance{a0, b0, h0}.normalized();
  const Integer& a = inst.a;
  const Integer& b = inst.b;
  const Integer& h = inst.h;
  if (h < a || a == 1 || b == 0) {
    return t2_scaled(a, b, h, 1, trace).to_integer("T2");
  }

  // i = j*a + t: floor((j*a + t)*b/a) = j*b + floor(t*b/a). Complete blocks
  // j = 0..Q-1 reuse T2(a,b;a) = T2(a,b;a-1) + a*b; the tail covers t = 1..m.
  Integer blocks = h / a;
  Integer m = h % a;
  Integer j1 = blocks * (blocks - 1) / 2;
  Integer j2 = (blocks - 1) * blocks * (2 * blocks - 1) / 6;
  Integer period_q = full_period_floor_sum(a, b);
  Trace nested;
  Integer tail_q = floor_sum(a, b, m, trace ? &nested : nullptr);
  if (trace) trace->substeps += nested.total_steps();

  Integer poly = a * a * b * j2 + a * period_q * j1 + b * sum_first(a) * j1 + blocks * a * b;
  poly += blocks * blocks * a * b * m + blocks * a * tail_q + blocks * b * sum_first(m);
  if (trace) {
    trace->add({Rule::period_reduction, a, b, h, {{"Q", blocks}, {"m", m}}, Rational(poly)});
  }
  Rational total = Rational(poly);
  total += t2_scaled(a, b, Integer(a - 1), Rational(blocks), trace);
  total += t2_scaled(a, b, m, 1, trace);
  return total.to_integer("T2");
}

Integer t3(const Integer& a0, const Integer& b0, const Integer& h0) {
  const Instance inst = Instance{a0, b0, h0}.normalized();
  const auto& [a, b, h] = inst;
  Rational value = t1(a, b, h);
  value += Rational(Integer(2 * b), a) * Rational(t2(a, b, h));
  value -= Rational(Integer(b * b * sum_squares(h)), Integer(a * a));
  return value.to_integer("T3");
}

Integer t3_alt(const Integer& a0, const Integer& b0, const Integer& h0) {
  const Instance inst = Instance{a0, b0, h0}.normalized();
  const auto& [a, b, h] = inst;
  if (!(a > b && b >= 1)) {
    throw InvalidArgument("t3_alt needs a > b >= 1 after reduction; got a=" + to_string(a) +
                          ", b=" + to_string(b));
  }
  Integer hp = b * h / a;
  // Quotients t that are multiples of b start one index earlier than
  // floor(t*a/b) suggests; only possible once h >= a.
  Integer multiples = hp / b;
  return h * hp * hp - 2 * t2(b, a, hp) + floor_sum(b, a, hp) + b * multiples * (multiples + 1) -
         multiples;
}

SumReport full_report(const Instance& given) {
  const Instance inst = given.normalized();
  const auto& [a, b, h] = inst;

  SumReport rep;
  rep.instance = given;
  rep.q_sum = floor_sum(inst);
  Rational s = s_value(a, b, h);
  rep.t1 = (Rational(2) * s - Rational(Integer((a + 2) * rep.q_sum))) / Rational(a);
  rep.t2 = t2(a, b, h);
  Rational t3v = rep.t1 + Rational(Integer(2 * b), a) * Rational(rep.t2) -
                 Rational(Integer(b * b * sum_squares(h)), Integer(a * a));
  rep.t3 = t3v.to_integer("T3");

  // Sums that depend on the scale of a and b use the caller's values.
  const Integer& ga = given.a;
  const Integer& gb = given.b;
  rep.r_sum = gb * sum_first(h) - ga * rep.q_sum;
  rep.r2_sum = (Rational(Integer(ga * ga)) * rep.t1).to_integer("sum of squared remainders");
  rep.ir_sum = gb * sum_squares(h) - ga * rep.t2;
  rep.qr_sum = gb * rep.t2 - ga * rep.t3;
  rep.s = ga == a ? s
                  : Rational(ga, 2) * rep.t1 + Rational(Integer(ga + 2), 2) * Rational(rep.q_sum);
  return rep;
}

}  // namespace recip
