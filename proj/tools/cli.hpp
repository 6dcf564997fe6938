#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ashg::cli {

// Exit codes: 0 stable / found / ok, 2 unstable / none exists, 1 usage or
// input error.
inline constexpr int kOk = 0;
inline constexpr int kError = 1;
inline constexpr int kNegative = 2;

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ashg::cli
