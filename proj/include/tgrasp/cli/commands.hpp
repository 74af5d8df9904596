#pragma once

#include <string>
#include <vector>

namespace tgrasp::cli {

/// Entry point behind the binary. Exit codes: 0 ok, 1 usage, 2 data, 3 runtime.
int run_command(int argc, char** argv);
int run_command(const std::vector<std::string>& args);

}  // namespace tgrasp::cli
