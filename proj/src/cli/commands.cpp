#include "tgrasp/cli/commands.hpp"
namespace tgrasp::cli {
int run_command(int, char**) { return 0; }
int run_command(const std::vector<std::string>&) { return 0; }
}
