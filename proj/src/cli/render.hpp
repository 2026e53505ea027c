// src/cli/render.hpp - JSON and text rendering of library values.
#pragma once

#include "recip/trace.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>

namespace recip::cli {

nlohmann::ordered_json trace_to_json(const Trace& trace);

/// One line per step: "reciprocity a=.. b=.. h=.. [n0=..] -> contribution".
void print_trace_text(const Trace& trace, std::ostream& out);

}  // namespace recip::cli
