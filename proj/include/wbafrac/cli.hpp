#pragma once

// Command-line front end. Exit codes: 0 when every requested suite passes,
// 1 when a suite fails (the report is still written), 2 on usage or
// configuration errors.

#include <iosfwd>
#include <string>
#include <vector>

namespace wbafrac::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wbafrac::cli
