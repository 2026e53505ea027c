// src/oracle.cpp
#include "recip/oracle.hpp"

#include <vector>

namespace recip::oracle {

SumReport report(const Instance& inst) {
  inst.validate();
  const auto& [a, b, h] = inst;
  SumReport rep{inst, 0, 0, 0, Rational(), 0, 0, 0, 0, Rational()};
  Integer q, r;
  for (Integer i = 1; i <= h; ++i) {
    Integer ib = i * b;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), ib.get_mpz_t(), a.get_mpz_t());
    rep.q_sum += q;
    rep.r_sum += r;
    rep.r2_sum += r * r;
    rep.t2 += i * q;
    rep.t3 += q * q;
    rep.ir_sum += i * r;
    rep.qr_sum += q * r;
  }
  rep.t1 = Rational(rep.r2_sum, Integer(a * a));
  rep.s = Rational(a, 2) * rep.t1 + Rational(Integer(a + 2), 2) * Rational(rep.q_sum);
  return rep;
}

Rational s_value(const Integer& a, const Integer& b, const Integer& h) {
  return report(Instance{a, b, h}).s;
}

Nonrep nonrep(const Integer& a, const Integer& b) {
  if (a < 1 || b < 1 || gcd(a, b) != 1) throw InvalidArgument("nonrep needs coprime a, b >= 1");
  const unsigned long limit = Integer(a * b).get_ui();
  const unsigned long sa = a.get_ui();
  const unsigned long sb = b.get_ui();
  std::vector<bool> representable(limit, false);
  for (unsigned long x = 0; x < limit; x += sa) {
    for (unsigned long v = x; v < limit; v += sb) representable[v] = true;
  }
  Nonrep out{0, 0};
  for (unsigned long v = 0; v < limit; ++v) {
    if (!representable[v]) {
      out.count += 1;
      out.sum += v;
    }
  }
  return out;
}

Integer four_var(const Integer& a, const Integer& b, const Integer& n) {
  if (a < 1 || b < 1) throw InvalidArgument("four_var needs a, b >= 1");
  Integer count = 0;
  if (n < 0) return count;
  for (Integer x = 0; a * x <= n; ++x) {
    for (Integer y = 0; a * x + b * y <= n; ++y) {
      // z + u = n - ax - by has that many + 1 solutions.
      count += n - a * x - b * y + 1;
    }
  }
  return count;
}

}  // namespace recip::oracle
