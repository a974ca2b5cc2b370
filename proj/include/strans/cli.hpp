#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace strans {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the strans tool. `args` excludes the program name.
/// Reports go to `out` as "key: value" lines; diagnostics go to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace strans
