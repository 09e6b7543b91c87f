#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mmc {

// Parses and executes one command-line invocation (arguments exclude the
// program name). JSON results go to `out`, diagnostics and usage to `err`.
//
// Exit codes: 0 success, 2 invalid input or usage, 3 refused problem scale,
// 1 any other failure (including a verification suite that found a
// violation). Output is deterministic byte-for-byte for fixed inputs and
// --seed; floating-point fields are rounded to 12 significant digits.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mmc
