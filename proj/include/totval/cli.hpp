// Command-line front end. Exit codes: 0 success, 1 verify mismatch or
// oracle --compare mismatch, 2 invalid input, 3 internal error.
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace totval::cli {

inline constexpr const char* kVersion = "0.1.0";

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace totval::cli
