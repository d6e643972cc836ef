#pragma once

#include <iosfwd>

namespace hyperlab::cli {

/// Exit codes: 0 all checks pass, 1 unexpected failure, 2 invalid input or a
/// failed check, 3 degenerate input, 4 I/O or parse error.
enum ExitCode : int { Ok = 0, Unexpected = 1, Invalid = 2, Degenerate = 3, Io = 4 };

/// Entry point behind the `pade` executable. JSON goes to `out` unless --out
/// names a file; diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hyperlab::cli
