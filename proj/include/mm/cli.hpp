#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mm {

/// Runs `mm <command> [problem-file] [options]`; args excludes the program
/// name. Writes one JSON document to `out` and returns the exit status.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mm
