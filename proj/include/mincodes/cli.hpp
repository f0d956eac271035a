#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mincodes::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_domain = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_budget = 3;

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace mincodes::cli
