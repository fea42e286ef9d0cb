#pragma once

#include <ostream>

namespace qoseval {

/// Exit codes of the qoseval command line.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitIo = 2;

/// Entry point behind the `qoseval` binary; writes reports to `out` and
/// diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qoseval
