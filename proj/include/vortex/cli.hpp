#pragma once

#include <ostream>
#include <span>
#include <string>

namespace vortex {

// Entry point of the `vortex` command-line tool. `args` excludes the program
// name. Machine-readable output goes to `out`, diagnostics to `err`. Returns
// the process exit code: 0 iff the requested work completed.
//
//   run             one optimization, result JSON on stdout
//   campaign        execute a JSON plan file
//   compare         Wilcoxon comparison of two raw-results sets
//   list-functions  benchmark registry as JSON
//   trace           per-iteration convergence CSV
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace vortex
