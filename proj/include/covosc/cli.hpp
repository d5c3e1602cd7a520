#pragma once

// Front-end for the `covosc` executable. Subcommands: boost, density,
// residual, expand, modes, algebra-check.
//
// Exit codes: 0 success, 2 malformed arguments or configuration, 3 I/O
// failure, 4 domain error (rapidity out of range, degenerate coupling, cutoff
// or order outside its bounds), 5 convergence or tolerance failure. Results
// are written only on exit code 0.

#include <iosfwd>
#include <string>
#include <vector>

namespace covosc::cli {

enum ExitCode : int {
    kOk = 0,
    kParseError = 2,
    kIoError = 3,
    kDomainError = 4,
    kConvergenceError = 5,
};

/// args excludes the program name.
int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace covosc::cli
