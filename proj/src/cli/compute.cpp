// src/cli/compute.cpp - `recip compute`
#include "commands.hpp"
#include "render.hpp"

#include "recip/cross_sum.hpp"
#include "recip/floor_sum.hpp"
#include "recip/square_sum.hpp"

#include <algorithm>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

namespace recip::cli {

namespace {

const std::vector<std::string> kAllTargets = {"q", "r", "r2", "t1", "t2", "t3", "ir", "qr", "s"};

struct ComputeOptions {
  std::string a, b, h;
  std::string targets = "q,r,r2,t1,t2,t3,ir,qr,s";
  std::string format = "json";
  bool trace = false;
};

std::vector<std::string> parse_targets(const std::string& spec) {
  std::vector<std::string> wanted;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (std::find(kAllTargets.begin(), kAllTargets.end(), item) == kAllTargets.end()) {
      throw InvalidArgument("unknown target '" + item + "'");
    }
    if (std::find(wanted.begin(), wanted.end(), item) == wanted.end()) wanted.push_back(item);
  }
  if (wanted.empty()) throw InvalidArgument("no targets requested");
  // Emit in canonical order so the field set alone determines the layout.
  std::vector<std::string> ordered;
  for (const auto& t : kAllTargets) {
    if (std::find(wanted.begin(), wanted.end(), t) != wanted.end()) ordered.push_back(t);
  }
  return ordered;
}

struct TracedValue {
  std::string target;
  std::string value;
  Trace trace;
};

int run_compute(const ComputeOptions& opt, std::ostream& out) {
  const Instance given{parse_integer(opt.a), parse_integer(opt.b), parse_integer(opt.h)};
  const Instance inst = given.normalized();
  const bool normalized = !(inst == given);
  const auto targets = parse_targets(opt.targets);
  auto wants = [&](std::initializer_list<const char*> names) {
    return std::any_of(names.begin(), names.end(), [&](const char* n) {
      return std::find(targets.begin(), targets.end(), n) != targets.end();
    });
  };
  const auto& [a, b, h] = inst;

  const bool need_t2 = wants({"t2", "ir", "t3", "qr"});
  const bool need_s = wants({"s", "t1", "r2", "t3", "qr"});
  const bool need_q = need_s || wants({"q", "r"});

  std::vector<TracedValue> traces;
  std::optional<Integer> q, t2v, t3v;
  std::optional<Rational> s, t1v;
  if (need_q) {
    Trace tr;
    q = floor_sum(inst, opt.trace ? &tr : nullptr);
    if (opt.trace && wants({"q", "r"})) traces.push_back({"q", to_string(*q), std::move(tr)});
  }
  if (need_s) {
    Trace tr;
    s = s_value(a, b, h, opt.trace ? &tr : nullptr);
    t1v = (Rational(2) * *s - Rational(Integer((a + 2) * *q))) / Rational(a);
    if (opt.trace) traces.push_back({"s", s->str(), std::move(tr)});
  }
  if (need_t2) {
    Trace tr;
    t2v = t2(a, b, h, opt.trace ? &tr : nullptr);
    if (opt.trace) traces.push_back({"t2", to_string(*t2v), std::move(tr)});
  }
  if (wants({"t3", "qr"})) {
    Rational v = *t1v + Rational(Integer(2 * b), a) * Rational(*t2v) -
                 Rational(Integer(b * b * sum_squares(h)), Integer(a * a));
    t3v = v.to_integer("T3");
  }

  std::vector<std::pair<std::string, std::string>> sums;
  for (const auto& t : targets) {
    std::string v;
    if (t == "q") v = to_string(*q);
    else if (t == "r") v = to_string(Integer(b * sum_first(h) - a * *q));
    else if (t == "r2") v = to_string((Rational(Integer(a * a)) * *t1v).to_integer("r2"));
    else if (t == "t1") v = t1v->str();
    else if (t == "t2") v = to_string(*t2v);
    else if (t == "t3") v = to_string(*t3v);
    else if (t == "ir") v = to_string(Integer(b * sum_squares(h) - a * *t2v));
    else if (t == "qr") v = to_string(Integer(b * *t2v - a * *t3v));
    else if (t == "s") v = s->str();
    sums.emplace_back(t, std::move(v));
  }

  if (opt.format == "json") {
    nlohmann::ordered_json doc;
    doc["a"] = to_string(a);
    doc["b"] = to_string(b);
    doc["h"] = to_string(h);
    doc["normalized"] = normalized;
    auto js = nlohmann::ordered_json::object();
    for (const auto& [k, v] : sums) js[k] = v;
    doc["sums"] = std::move(js);
    if (opt.trace) {
      auto arr = nlohmann::ordered_json::array();
      for (const auto& tv : traces) {
        nlohmann::ordered_json entry;
        entry["target"] = tv.target;
        entry["value"] = tv.value;
        entry["substeps"] = std::to_string(tv.trace.substeps);
        entry["steps"] = trace_to_json(tv.trace);
        arr.push_back(std::move(entry));
      }
      doc["trace"] = std::move(arr);
    }
    out << doc.dump(2) << "\n";
  } else {
    out << "a = " << a << "\nb = " << b << "\nh = " << h << "\n";
    out << "normalized = " << (normalized ? "true" : "false") << "\n";
    for (const auto& [k, v] : sums) out << k << " = " << v << "\n";
    for (const auto& tv : traces) {
      out << "trace " << tv.target << " = " << tv.value << ":\n";
      print_trace_text(tv.trace, out);
    }
  }
  return kOk;
}

}  // namespace

Action add_compute(CLI::App& app) {
  auto opt = std::make_shared<ComputeOptions>();
  app.add_option("--a", opt->a, "modulus a >= 1")->required();
  app.add_option("--b", opt->b, "multiplier b >= 0")->required();
  app.add_option("--h", opt->h, "summation bound h >= 0")->required();
  app.add_option("--targets", opt->targets, "comma list from q,r,r2,t1,t2,t3,ir,qr,s")
      ->capture_default_str();
  app.add_option("--format", opt->format, "json or text")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_flag("--trace", opt->trace, "include recursion traces");
  return [opt](std::ostream& out, std::ostream&) { return run_compute(*opt, out); };
}

}  // namespace recip::cli
