#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lshape::cli {

/// Exit statuses of `run`.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kDomain = 2,
  kVerificationFailed = 3,
};

/// Full command line including the program name. Tables go to `out` (or to
/// --out), diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lshape::cli
