#pragma once

#include <string>
#include <vector>

namespace qlca {

/// Command line entry point. Exit codes: 0 success, 1 validation failure,
/// 2 computation failure, 64 usage error.
int run_command(const std::vector<std::string>& args);
int run_command(int argc, const char* const* argv);

}  // namespace qlca
