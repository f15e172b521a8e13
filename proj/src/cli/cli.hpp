#pragma once

#include <ostream>

namespace sdp::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kData = 2, kOracleFailed = 3 };

/// Entry point of `semiring-dp`; writes the JSON document to `out` (or the
/// --out file) and diagnostics to `err`. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sdp::cli
