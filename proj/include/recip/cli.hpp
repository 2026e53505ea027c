// include/recip/cli.hpp - command-line front end.
//
//   recip compute   --a A --b B --h H [--targets q,t1,...] [--format json|text] [--trace]
//   recip verify    (--a A --b B --h H | --max M [--h-grid SPEC])
//   recip frobenius --a A --b B [--n N] [--format json|text]
//   recip bench     --bits 32,64 [--reps R] [--seed S] [--format csv|json]
//
// Numbers travel as decimal strings in both directions.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace recip::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kInvalidInput = 2 };

/// Runs one command line (without the program name) and returns its exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace recip::cli
