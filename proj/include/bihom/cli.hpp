#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bihom::cli {

/// Exit codes: 0 pass, 1 mathematical failure, 2 usage or parse error.
enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2 };

/// Runs one command line (without the program name). Reports and bundles
/// go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Construction names accepted by `derive --construction`.
std::vector<std::string> construction_names();

}  // namespace bihom::cli
