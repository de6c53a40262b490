#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace grapheq {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitLedgerFailure = 3;

/// Runs the command line (args excludes the program name). Returns the exit
/// code; normal output goes to out, diagnostics and usage to err.
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace grapheq
