// src/cli/render.cpp
#include "render.hpp"

#include <ostream>

namespace recip::cli {

nlohmann::ordered_json trace_to_json(const Trace& trace) {
  auto steps = nlohmann::ordered_json::array();
  for (const auto& step : trace.steps) {
    nlohmann::ordered_json s;
    s["rule"] = std::string(rule_name(step.rule));
    s["a"] = to_string(step.a);
    s["b"] = to_string(step.b);
    s["h"] = to_string(step.h);
    auto derived = nlohmann::ordered_json::object();
    for (const auto& [key, value] : step.derived) derived[key] = to_string(value);
    s["derived"] = std::move(derived);
    s["contribution"] = step.contribution.str();
    steps.push_back(std::move(s));
  }
  return steps;
}

void print_trace_text(const Trace& trace, std::ostream& out) {
  for (const auto& step : trace.steps) {
    out << "  " << rule_name(step.rule) << " a=" << step.a << " b=" << step.b << " h=" << step.h;
    for (const auto& [key, value] : step.derived) out << ' ' << key << '=' << value;
    out << " -> " << step.contribution << '\n';
  }
  if (trace.substeps) out << "  (" << trace.substeps << " nested steps)\n";
}

}  // namespace recip::cli
