#include "tgrasp/cli/commands.hpp"

int main(int argc, char** argv) { return tgrasp::cli::run_command(argc, argv); }
