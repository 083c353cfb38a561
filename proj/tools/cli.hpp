#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace amalgenus::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitValidation = 2,
  kExitBudget = 3,
  kExitInternal = 4,
};

struct RunConfig {
  std::string command;  // aut, subgroups, iso-classes, genus, genus-pushout, oracle-sweep, conditions
  std::string group;
  std::string g1, h1, g2, h2;
  std::string catalog;
  std::string input;
  std::string output;  // empty: write to the output stream
  std::string format = "json";
  std::optional<std::uint64_t> aut_budget;
  std::optional<std::uint64_t> oracle_limit;
  std::optional<std::string> nplus;  // default: upper for finite groups, exact for --input
  std::size_t max_h = 6;
  bool pairwise = false;
};

/// Runs one command. Errors are reported on `err` and mapped to exit codes.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv with CLI11 and calls run().
int main_from_args(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace amalgenus::cli
