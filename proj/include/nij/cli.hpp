#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nij::cli {

enum ExitCode { kOk = 0, kCheckFailed = 1, kBadInput = 2 };

/// Runs one command (args exclude the program name). Exactly one JSON
/// document goes to `out`; human-readable diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nij::cli
