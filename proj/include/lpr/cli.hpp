#pragma once

#include <string>
#include <vector>

namespace lpr {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitIo = 2;

/// Entry point of the lprtrack tool. `args` excludes the program name.
/// Returns 0 on success, 1 on usage errors, 2 on I/O errors.
int run_cli(const std::vector<std::string>& args);

}  // namespace lpr
