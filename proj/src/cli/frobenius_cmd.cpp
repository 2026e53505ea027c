// src/cli/frobenius_cmd.cpp - `recip frobenius`
#include "commands.hpp"

#include "recip/frobenius.hpp"

#include <json.hpp>

#include <memory>
#include <optional>
#include <ostream>

namespace recip::cli {

namespace {

struct FrobeniusOptions {
  std::string a, b, n;
  std::string format = "json";
};

int run_frobenius(const FrobeniusOptions& opt, bool with_n, std::ostream& out) {
  const Integer a = parse_integer(opt.a);
  const Integer b = parse_integer(opt.b);
  const FrobeniusSummary summary = frobenius_summary(a, b);
  std::optional<Integer> count;
  if (with_n) count = four_var_count(a, b, parse_integer(opt.n));

  if (opt.format == "json") {
    nlohmann::ordered_json doc;
    doc["a"] = to_string(summary.a);
    doc["b"] = to_string(summary.b);
    doc["nonrep_count"] = to_string(summary.nonrep_count);
    doc["nonrep_sum"] = to_string(summary.nonrep_sum);
    if (count) {
      doc["n"] = opt.n;
      doc["four_var_count"] = to_string(*count);
    }
    out << doc.dump(2) << "\n";
  } else {
    out << "a = " << summary.a << "\nb = " << summary.b << "\n";
    out << "nonrep_count = " << summary.nonrep_count << "\n";
    out << "nonrep_sum = " << summary.nonrep_sum << "\n";
    if (count) out << "four_var_count(n=" << opt.n << ") = " << *count << "\n";
  }
  return kOk;
}

}  // namespace

Action add_frobenius(CLI::App& app) {
  auto opt = std::make_shared<FrobeniusOptions>();
  app.add_option("--a", opt->a, "first generator")->required();
  app.add_option("--b", opt->b, "second generator, coprime to a")->required();
  auto* on = app.add_option("--n", opt->n, "also count solutions of ax+by+z+u=n, 0 <= n < ab");
  app.add_option("--format", opt->format, "json or text")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  return [opt, on](std::ostream& out, std::ostream&) {
    return run_frobenius(*opt, on->count() > 0, out);
  };
}

}  // namespace recip::cli
