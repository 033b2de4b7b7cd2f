#pragma once

#include <iosfwd>

namespace reasm {

enum ExitCode : int { kExitOk = 0, kExitInternal = 1, kExitValidation = 2, kExitLimit = 3, kExitVerify = 4 };

/// Entry point of the `reasm` tool. Machine output goes to `out` as JSON,
/// diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace reasm
