// src/trace.cpp
#include "recip/trace.hpp"

#include <algorithm>

namespace recip {

std::string_view rule_name(Rule rule) {
  switch (rule) {
    case Rule::reciprocity: return "reciprocity";
    case Rule::division: return "division";
    case Rule::period_reduction: return "period-reduction";
    case Rule::base: return "base";
  }
  return "unknown";
}

Rational Trace::fold() const {
  Rational total;
  for (const auto& step : steps) total += step.contribution;
  return total;
}

std::size_t Trace::count(Rule rule) const {
  return static_cast<std::size_t>(
      std::count_if(steps.begin(), steps.end(), [rule](const TraceStep& s) { return s.rule == rule; }));
}

}  // namespace recip
