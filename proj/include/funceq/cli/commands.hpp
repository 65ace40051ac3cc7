#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace funceq::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitInvalidInput = 1,
    kExitUnguaranteed = 2,
    kExitNumericalFailure = 3,
};

/// Entry point of the `funceq` tool: check, solve, approx, oracle, bench.
/// Each command prints a JSON run report on `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, char** argv);

}  // namespace funceq::cli
