#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace coprod::cli {

/// Exit codes.
inline constexpr int kSuccess = 0;
inline constexpr int kCheckFailure = 1;
inline constexpr int kUsageError = 2;

/// Version tag of the structured output.
inline constexpr const char* kSchema = "coprod-report/1";

/// Environment variable consulted for the default seed.
inline constexpr const char* kSeedVariable = "COPROD_SEED";

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coprod::cli
