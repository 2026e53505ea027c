// src/cli/cli.cpp
#include "commands.hpp"

#include <ostream>

namespace recip::cli {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact power sums of floor(i*b/a) and {i*b/a} by reciprocity", "recip"};
  // -h would collide with the --h bound option.
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);

  struct Entry {
    CLI::App* sub;
    Action action;
  };
  std::vector<Entry> entries;
  auto reg = [&](const char* name, const char* help, Action (*add)(CLI::App&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    entries.push_back({sub, add(*sub)});
  };
  reg("compute", "Compute sums for one instance", add_compute);
  reg("verify", "Compare the fast path against brute force", add_verify);
  reg("frobenius", "Counts and sums of nonrepresentable numbers", add_frobenius);
  reg("bench", "Step counts and timings across bit sizes", add_bench);

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.emplace_back("recip");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInvalidInput;
  }

  for (auto& entry : entries) {
    if (!entry.sub->parsed()) continue;
    try {
      return entry.action(out, err);
    } catch (const InvalidArgument& e) {
      err << "error: " << e.what() << "\n";
      return kInvalidInput;
    } catch (const OutOfDomain& e) {
      err << "error: " << e.what() << "\n";
      return kInvalidInput;
    } catch (const NotInvertible& e) {
      err << "error: " << e.what() << "\n";
      return kInvalidInput;
    }
  }
  return kInvalidInput;
}

}  // namespace recip::cli
