#pragma once

#include <exception>
#include <iosfwd>
#include <string>
#include <vector>

#include "spinv/json_io.hpp"

namespace spinv::cli {

enum ExitCode : int {
  kSuccess = 0,
  kPredicateFalse = 1,
  kParseError = 2,
  kDomainError = 3,
  kInvariantFailure = 4,
};

struct CommandOutcome {
  int exit_code = kSuccess;
  Json payload;             // written to stdout when not null
  std::string diagnostics;  // written to stderr
  std::string text;         // help output, written to stdout instead of payload
};

// Exit code for an exception escaping a subcommand.
int exit_code_for(const std::exception& e);

// args excludes the program name. Files named "-" are read from `in`.
CommandOutcome run(const std::vector<std::string>& args, std::istream& in);

}  // namespace spinv::cli
