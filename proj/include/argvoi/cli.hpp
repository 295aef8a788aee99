#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace argvoi {

// Runs one command (args exclude the program name) and writes the report to
// `out` (or the file named by --output). Returns 0 on success, 1 on
// validation errors, 2 on usage errors. Error paths print a single
// diagnostic line to `err` and never a partial report.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace argvoi
