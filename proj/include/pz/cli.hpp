#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pz {

// Exit statuses of the pzeta tool.
enum ExitCode : int { kExitOk = 0, kExitNumeric = 1, kExitUsage = 2 };

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, char** argv);

}  // namespace pz
