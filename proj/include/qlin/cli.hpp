#pragma once

#include <string>
#include <vector>

namespace qlin::cli {

// Runs the command line given the arguments after the program name.
// Exit codes: 0 success, 2 validation failure (bad flags, files, JSON or
// schema), 1 computation failure. All input parsing and validation happens
// before any computation; output files appear only on success.
int run(const std::vector<std::string>& args);

}  // namespace qlin::cli
