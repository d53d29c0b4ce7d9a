#pragma once

#include <ostream>

namespace hurwitz {

/// Exit codes of the command line front end.
enum ExitCode : int { kExitOk = 0, kExitVerifyFailed = 1, kExitBadInput = 2, kExitIo = 3 };

/// Entry point of the `hurwitz` tool: compute, verify <suite>, export <target>.
/// Normal output goes to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hurwitz
