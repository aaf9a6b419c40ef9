#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace karyx::cli {

// Exit code taxonomy, one class per failure kind so CI can tell them apart.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitSchema = 3;
inline constexpr int kExitPrecondition = 4;
inline constexpr int kExitVerification = 5;

/// Runs one command. `args` excludes the program name. All output goes to the
/// given streams, so commands can be driven in-process.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace karyx::cli
