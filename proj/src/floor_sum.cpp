// src/floor_sum.cpp
#include "recip/floor_sum.hpp"

namespace recip {

void Instance::validate() const {
  if (a < 1) throw InvalidArgument("a must be >= 1, got " + to_string(a));
  if (b < 0) throw InvalidArgument("b must be >= 0, got " + to_string(b));
  if (h < 0) throw InvalidArgument("h must be >= 0, got " + to_string(h));
}

Instance Instance::normalized() const {
  validate();
  Integer g = gcd(a, b);
  if (g == 1) return *this;
  return Instance{exact_div(a, g, "normalize a"), exact_div(b, g, "normalize b"), h};
}

Integer full_period_floor_sum(const Integer& a, const Integer& b) {
  return exact_div(Integer((a - 1) * (b - 1)), 2, "full-period floor sum") + b;
}

Integer floor_sum(const Integer& a, const Integer& b, const Integer& h, Trace* trace) {
  return floor_sum(Instance{a, b, h}, trace);
}

Integer floor_sum(const Instance& inst, Trace* trace) {
  Instance cur = inst.normalized();
  Integer acc = 0;
  int sign = 1;

  auto record = [&](Rule rule, std::vector<std::pair<std::string, Integer>> derived,
                    const Integer& amount) {
    if (trace) trace->add({rule, cur.a, cur.b, cur.h, std::move(derived), Rational(amount)});
  };

  while (true) {
    auto& [a, b, h] = cur;
    if (h == 0 || b == 0) {
      record(Rule::base, {}, 0);
      break;
    }
    if (b >= a) {
      Integer q = b / a;
      Integer r = b % a;
      Integer amount = sign * q * sum_first(h);
      record(Rule::division, {{"q", q}, {"r", r}}, amount);
      acc += amount;
      b = std::move(r);
      continue;
    }
    if (h >= a) {
      // h = Q*a + m; block j contributes j*b per term on top of one full period.
      Integer blocks = h / a;
      Integer m = h % a;
      Integer amount = a * b * blocks * (blocks - 1) / 2 + blocks * full_period_floor_sum(a, b) +
                       blocks * b * m;
      amount *= sign;
      record(Rule::period_reduction, {{"Q", blocks}, {"m", m}}, amount);
      acc += amount;
      h = std::move(m);
      continue;
    }
    Integer k = b * h / a;
    Integer amount = sign * h * k;
    record(Rule::reciprocity, {{"K", k}}, amount);
    acc += amount;
    sign = -sign;
    Instance next{b, a, std::move(k)};
    cur = std::move(next);
  }
  return acc;
}

Integer remainder_sum(const Instance& inst) {
  inst.validate();
  return inst.b * sum_first(inst.h) - inst.a * floor_sum(inst);
}

}  // namespace recip
