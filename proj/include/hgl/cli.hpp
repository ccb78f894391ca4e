#pragma once

#include <iosfwd>
#include <string>

namespace hgl::cli {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kSchema = 1;

enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2, kBudget = 3 };

/// Parses argv, runs one subcommand, writes the JSON (or text) record to `out`
/// and logs to `err`. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// 64-bit FNV-1a digest as 16 hex digits; used for cache file names.
std::string digest(const std::string& text);

}  // namespace hgl::cli
