#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace voicepack::cli {

/// Exit statuses of the voicepack command.
inline constexpr int kOk = 0;
inline constexpr int kUsageError = 1;
inline constexpr int kDataError = 2;

/// Runs one command. `args` excludes the program name. Diagnostics go to
/// `err`; `out` only carries machine-readable output.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace voicepack::cli
