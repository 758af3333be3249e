#pragma once

// Subcommand drivers.  Each returns the process exit code:
// 0 success, 1 check or validation failure, 2 numerical divergence.

#include <string>

#include "squeezetrap/config.hpp"

namespace squeezetrap {

int cmd_verify(const std::string& filter, int threads);
int cmd_simulate(const RunConfig& c);
int cmd_equilibria(const RunConfig& c);
int cmd_spectrum(const RunConfig& c);
int cmd_stability(const RunConfig& c, int threads);

// Shared entry used by main(); loads the config when the command needs one.
int run_cli(int argc, char** argv);

}  // namespace squeezetrap
