#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace aslab {

inline constexpr const char* kVersion = "aslab 0.1.0";

/// Runs one `aslab` invocation (args exclude the program name) and returns the
/// exit code: 0 ok, 1 verification failure, 2 bad arguments, 3 over budget.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace aslab
