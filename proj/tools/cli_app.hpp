// Entry point of the command-line front end, callable in-process so tests can
// drive it without spawning.  Arguments are what main() would see after the
// program name; returns the process exit code (0 ok, 2 bad configuration,
// 3 numerical failure).
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace branchon::cli {

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace branchon::cli
