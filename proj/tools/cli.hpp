#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace plab::cli {

enum ExitCode : int {
  kOk = 0,
  kCounterexample = 1,
  kUsage = 2,
  kCapExceeded = 3,
};

/// Runs one invocation. Results go to `out`, the effective configuration and
/// every diagnostic go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace plab::cli
