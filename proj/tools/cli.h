#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace edgebal::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInput = 2,
  kBudget = 3,
};

// Entry point behind the `edgebal` binary; streams are injected for tests.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err);

// Convenience for tests: argv[0] is supplied.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace edgebal::cli
