#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nsopt {

/// Dispatches the nsopt subcommands (decompose, maximize, rate, rate-series,
/// qubit-table, verify) on the given argument list (program name excluded).
/// Returns 0 on success, 1 on usage or validation errors, 2 when a
/// verification sweep fails. All results go to `out`; diagnostics and
/// timings go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nsopt
