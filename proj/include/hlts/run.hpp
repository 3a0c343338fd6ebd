#pragma once

#include "hlts/workspace.hpp"

namespace hlts {

/// Outcome of one CLI command: machine-readable JSON, a human rendering,
/// and the process exit code (0 pass/computed, 1 violations).
/// Input errors are reported by throwing hlts::error (exit code 2).
struct Report {
  std::string machine;  // canonical JSON text
  std::string text;
  int exit_code = 0;
};

/// Dispatches one command line (without the program name or I/O flags)
/// against a workspace, e.g. {"check","lts","E4"} or
/// {"cohomology","A","--degree","1"}.
Report run_command(const std::vector<std::string>& args, const Workspace& ws);

}  // namespace hlts
