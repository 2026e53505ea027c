// include/recip/trace.hpp - step-by-step record of a recursive evaluation.
#pragma once

#include "recip/numeric.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace recip {

enum class Rule { reciprocity, division, period_reduction, base };

std::string_view rule_name(Rule rule);

/// One step of a recursion. `contribution` is the amount the step adds to the
/// final result, already scaled by every sign and factor accumulated from the
/// enclosing reciprocity steps, so the result is the plain sum of all
/// contributions in a trace.
struct TraceStep {
  Rule rule;
  Integer a;
  Integer b;
  Integer h;
  std::vector<std::pair<std::string, Integer>> derived;
  Rational contribution;
};

/// Caller-owned sink. `substeps` counts steps taken by nested evaluations
/// (the T1 and floor-sum evaluations inside each T2 level) that are not
/// listed individually.
struct Trace {
  std::vector<TraceStep> steps;
  std::uint64_t substeps = 0;

  void add(TraceStep step) { steps.push_back(std::move(step)); }
  std::uint64_t total_steps() const { return steps.size() + substeps; }

  /// Sum of all step contributions.
  Rational fold() const;
  std::size_t count(Rule rule) const;
};

}  // namespace recip
