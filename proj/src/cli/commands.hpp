// src/cli/commands.hpp - subcommand registration, shared between cli.cpp and the commands.
#pragma once

#include "recip/cli.hpp"
#include "recip/numeric.hpp"

#include <CLI11.hpp>

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace recip::cli {

/// Body of a subcommand, run after CLI11 has parsed its options.
using Action = std::function<int(std::ostream& out, std::ostream& err)>;

Action add_compute(CLI::App& app);
Action add_verify(CLI::App& app);
Action add_frobenius(CLI::App& app);
Action add_bench(CLI::App& app);

/// Evaluates one --h-grid token ("7", "a", "2a+3", "a/2", "a-1") for a given a.
/// Returns false if the token is malformed.
bool eval_grid_token(const std::string& token, const Integer& a, Integer& value);

/// Splits a comma-separated grid spec and evaluates every token; negative
/// values are dropped and duplicates removed. Throws InvalidArgument on a
/// malformed token.
std::vector<Integer> eval_grid(const std::string& spec, const Integer& a);

}  // namespace recip::cli
