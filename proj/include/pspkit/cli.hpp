#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pspkit {

// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitInvalid = 1,        // artifact failed verification
    kExitParse = 2,          // unreadable input or bad arguments
    kExitBudget = 3,
    kExitInapplicable = 4,
    kExitBenchMismatch = 5,
    kExitSelfCheck = 6,      // a solver produced an invalid packing
};

// Entry point behind `pspkit`; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pspkit
