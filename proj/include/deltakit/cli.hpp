#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace deltakit::cli {

inline constexpr int kOk = 0;
inline constexpr int kFalse = 1;  ///< predicate answered false / none, or a suite failed
inline constexpr int kUsage = 2;  ///< usage or parse error
inline constexpr int kSizeGuard = 3;

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace deltakit::cli
