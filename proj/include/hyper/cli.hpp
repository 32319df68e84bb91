#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hyper::cli {

enum ExitCode : int {
  kOk = 0,
  kIoError = 1,
  kUsageError = 2,
  kNotHvGroup = 3,
  kNotIsomorphic = 4,
};

// args excludes the program name. Results go to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace hyper::cli
