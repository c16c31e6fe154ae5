#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bosonorder {

// CLI exit codes. User errors cover syntax problems and documented
// divergence/degeneracy conditions; internal errors are invariant breaches.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUserError = 2;
inline constexpr int kExitInternalError = 70;

/// Runs one CLI invocation. args excludes the program name. The structured
/// record goes to `out` (or to the --out file), diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bosonorder
