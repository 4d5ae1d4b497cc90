#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace edmcp::cli {

inline constexpr const char* kVersion = "1.0.0";

enum ExitCode : int {
    ok = 0,
    verify_failed = 1,
    bad_input = 2,
    resource_limit = 3,
    construction_error = 4,
};

/// Runs one command line (args exclude the program name). JSON input that is
/// not given by path is read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace edmcp::cli
