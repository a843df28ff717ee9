#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace logbott::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,  // mismatch, unexpected verdict, or out of tolerance
  kInputError = 2,   // parse errors, unreadable or invalid input
};

// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace logbott::cli
