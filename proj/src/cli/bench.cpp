// src/cli/bench.cpp - `recip bench`
#include "commands.hpp"

#include "recip/cross_sum.hpp"
#include "recip/oracle.hpp"
#include "recip/sampling.hpp"
#include "recip/square_sum.hpp"

#include <json.hpp>

#include <chrono>
#include <memory>
#include <ostream>

namespace recip::cli {

namespace {

struct BenchOptions {
  std::vector<unsigned> bits;
  unsigned reps = 5;
  std::uint64_t seed = 1;
  std::string format = "csv";
  std::string oracle_limit = "1000000";
};

struct Row {
  unsigned bits;
  unsigned rep;
  std::string target;
  std::uint64_t steps;
  std::int64_t nanos;
  Instance inst;
};

template <typename F>
std::int64_t time_ns(F&& fn) {
  auto start = std::chrono::steady_clock::now();
  fn();
  auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count();
}

int run_bench(const BenchOptions& opt, std::ostream& out, std::ostream& err) {
  if (opt.bits.empty()) throw InvalidArgument("--bits needs at least one size");
  for (unsigned bits : opt.bits) {
    if (bits < 2) throw InvalidArgument("bit sizes must be >= 2");
  }
  const Integer limit = parse_integer(opt.oracle_limit);
  std::mt19937_64 rng(opt.seed);
  std::vector<Row> rows;
  std::size_t mismatches = 0;

  for (unsigned bits : opt.bits) {
    for (unsigned rep = 0; rep < opt.reps; ++rep) {
      const Instance inst = random_coprime_instance(rng, bits);
      const auto& [a, b, h] = inst;

      Trace t1_trace;
      Rational t1_value;
      auto t1_ns = time_ns([&] { t1_value = t1(a, b, h, &t1_trace); });
      rows.push_back({bits, rep, "t1", t1_trace.total_steps(), t1_ns, inst});

      Trace t2_trace;
      Integer t2_value;
      auto t2_ns = time_ns([&] { t2_value = t2(a, b, h, &t2_trace); });
      rows.push_back({bits, rep, "t2", t2_trace.total_steps(), t2_ns, inst});

      if (h <= limit) {
        SumReport slow;
        auto oracle_ns = time_ns([&] { slow = oracle::report(inst); });
        rows.push_back({bits, rep, "oracle", h.get_ui(), oracle_ns, inst});
        if (slow.t1 != t1_value || slow.t2 != t2_value) {
          ++mismatches;
          err << "mismatch at a=" << a << " b=" << b << " h=" << h << "\n";
        }
      }
    }
  }

  if (opt.format == "csv") {
    out << "bits,rep,seed,target,steps,nanos\n";
    for (const auto& r : rows) {
      out << r.bits << ',' << r.rep << ',' << opt.seed << ',' << r.target << ',' << r.steps << ','
          << r.nanos << '\n';
    }
  } else {
    nlohmann::ordered_json doc;
    doc["seed"] = std::to_string(opt.seed);
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
      nlohmann::ordered_json j;
      j["bits"] = std::to_string(r.bits);
      j["rep"] = std::to_string(r.rep);
      j["target"] = r.target;
      j["a"] = to_string(r.inst.a);
      j["b"] = to_string(r.inst.b);
      j["h"] = to_string(r.inst.h);
      j["steps"] = std::to_string(r.steps);
      j["nanos"] = std::to_string(r.nanos);
      arr.push_back(std::move(j));
    }
    doc["rows"] = std::move(arr);
    doc["mismatches"] = std::to_string(mismatches);
    out << doc.dump(2) << "\n";
  }
  return mismatches == 0 ? kOk : kMismatch;
}

}  // namespace

Action add_bench(CLI::App& app) {
  auto opt = std::make_shared<BenchOptions>();
  app.add_option("--bits", opt->bits, "bit sizes of a, e.g. 32,64,128")
      ->required()
      ->delimiter(',');
  app.add_option("--reps", opt->reps, "instances per bit size")->capture_default_str();
  app.add_option("--seed", opt->seed, "generator seed")->capture_default_str();
  app.add_option("--format", opt->format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--oracle-limit", opt->oracle_limit, "cross-check with brute force when h <= this")
      ->capture_default_str();
  return [opt](std::ostream& out, std::ostream& err) { return run_bench(*opt, out, err); };
}

}  // namespace recip::cli
