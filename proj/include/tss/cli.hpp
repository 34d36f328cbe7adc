#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tss::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kUsageError = 1;
inline constexpr int kCounterexample = 2;

/// Run one invocation. args holds the arguments after the program name,
/// e.g. {"series", "--form", "prime", "--count", "12"}. The payload goes to
/// out only when the command succeeds; diagnostics go to err. Returns the
/// exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tss::cli
