// src/cli/verify.cpp - `recip verify`
#include "commands.hpp"

#include "recip/cross_sum.hpp"
#include "recip/oracle.hpp"

#include <cctype>
#include <memory>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

namespace recip::cli {

namespace {

struct VerifyOptions {
  std::string a, b, h;
  long max = 0;
  std::string h_grid = "0,1,a/2,a-1,a,2a+3";
  std::string oracle_limit = "10000000";
};

// Prints one line per differing field; returns the number of differences.
std::size_t compare(const SumReport& fast, const SumReport& slow, std::ostream& out) {
  std::size_t bad = 0;
  const auto& [a, b, h] = fast.instance;
  auto check = [&](const char* field, const std::string& f, const std::string& o) {
    if (f == o) return;
    ++bad;
    out << "mismatch a=" << a << " b=" << b << " h=" << h << " field=" << field << " fast=" << f
        << " oracle=" << o << "\n";
  };
  check("q", to_string(fast.q_sum), to_string(slow.q_sum));
  check("r", to_string(fast.r_sum), to_string(slow.r_sum));
  check("r2", to_string(fast.r2_sum), to_string(slow.r2_sum));
  check("t1", fast.t1.str(), slow.t1.str());
  check("t2", to_string(fast.t2), to_string(slow.t2));
  check("t3", to_string(fast.t3), to_string(slow.t3));
  check("ir", to_string(fast.ir_sum), to_string(slow.ir_sum));
  check("qr", to_string(fast.qr_sum), to_string(slow.qr_sum));
  check("s", fast.s.str(), slow.s.str());
  return bad;
}

int run_verify(const VerifyOptions& opt, bool single, std::ostream& out) {
  const Integer limit = parse_integer(opt.oracle_limit);
  std::size_t instances = 0;
  std::size_t mismatched = 0;

  auto verify_one = [&](const Instance& given) {
    const Instance inst = given.normalized();
    if (inst.h > limit) {
      throw InvalidArgument("h=" + to_string(inst.h) + " exceeds --oracle-limit " +
                            to_string(limit));
    }
    ++instances;
    if (compare(full_report(inst), oracle::report(inst), out) != 0) ++mismatched;
  };

  if (single) {
    const Instance given{parse_integer(opt.a), parse_integer(opt.b), parse_integer(opt.h)};
    Instance inst = given.normalized();
    if (!(inst == given)) {
      out << "normalized (" << given.a << ", " << given.b << ") to (" << inst.a << ", " << inst.b
          << ")\n";
    }
    verify_one(given);
  } else {
    if (opt.max < 2) throw InvalidArgument("--max must be >= 2");
    for (long a = 2; a <= opt.max; ++a) {
      const std::vector<Integer> grid = eval_grid(opt.h_grid, Integer(a));
      for (long b = 2; b <= opt.max; ++b) {
        if (std::gcd(a, b) != 1) continue;
        for (const auto& h : grid) verify_one(Instance{a, b, h});
      }
    }
  }
  out << "verified " << instances << " instance(s), " << mismatched << " mismatch(es)\n";
  return mismatched == 0 ? kOk : kMismatch;
}

}  // namespace

bool eval_grid_token(const std::string& token, const Integer& a, Integer& value) {
  std::size_t pos = 0;
  auto read_int = [&](Integer& out) {
    std::size_t start = pos;
    while (pos < token.size() && std::isdigit(static_cast<unsigned char>(token[pos]))) ++pos;
    if (pos == start) return false;
    out = Integer(token.substr(start, pos - start), 10);
    return true;
  };
  Integer coef = 1;
  bool has_coef = read_int(coef);
  if (pos == token.size()) {
    if (!has_coef) return false;
    value = coef;
    return true;
  }
  if (token[pos] != 'a') return false;
  ++pos;
  Integer v = coef * a;
  if (pos < token.size() && token[pos] == '/') {
    ++pos;
    Integer d;
    if (!read_int(d) || d == 0) return false;
    v = floor_div(v, d);
  }
  if (pos < token.size() && (token[pos] == '+' || token[pos] == '-')) {
    bool minus = token[pos] == '-';
    ++pos;
    Integer c;
    if (!read_int(c)) return false;
    v += minus ? Integer(-c) : c;
  }
  if (pos != token.size()) return false;
  value = v;
  return true;
}

std::vector<Integer> eval_grid(const std::string& spec, const Integer& a) {
  std::set<Integer> values;
  std::stringstream ss(spec);
  std::string token;
  while (std::getline(ss, token, ',')) {
    Integer v;
    if (!eval_grid_token(token, a, v)) throw InvalidArgument("bad --h-grid token '" + token + "'");
    if (v >= 0) values.insert(v);
  }
  return {values.begin(), values.end()};
}

Action add_verify(CLI::App& app) {
  auto opt = std::make_shared<VerifyOptions>();
  auto* oa = app.add_option("--a", opt->a, "modulus a");
  auto* ob = app.add_option("--b", opt->b, "multiplier b");
  auto* oh = app.add_option("--h", opt->h, "summation bound h");
  auto* om = app.add_option("--max", opt->max, "sweep all coprime 2 <= a, b <= MAX");
  app.add_option("--h-grid", opt->h_grid, "bounds per pair, e.g. 0,1,a/2,a-1,a,2a+3")
      ->capture_default_str();
  app.add_option("--oracle-limit", opt->oracle_limit, "largest h the oracle will enumerate")
      ->capture_default_str();
  oa->needs(ob)->needs(oh);
  ob->needs(oa);
  oh->needs(oa);
  om->excludes(oa)->excludes(ob)->excludes(oh);
  return [opt, oa, om](std::ostream& out, std::ostream&) {
    if (oa->count() == 0 && om->count() == 0) {
      throw InvalidArgument("verify needs --a/--b/--h or --max");
    }
    return run_verify(*opt, oa->count() > 0, out);
  };
}

}  // namespace recip::cli
