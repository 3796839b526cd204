#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace famval {

/// Parsed CLI invocation. `command` is one of price, forward, parity,
/// delta, profit, calibrate, axioms.
struct CommandOptions {
    std::string command;
    std::string scenario_path;
    std::string out_path;        // calibrate only
    std::string format = "text"; // text | json
    std::uint64_t seed = 1;      // axioms only
    int cases = 10000;           // axioms only
};

/// Runs one command against a scenario file and writes the report to `out`.
/// Returns the process exit code: 0 success, 2 validation error (bad file,
/// bad flags, invariant violations), 3 computation error (degenerate
/// family, uncalibrated spot, impossible calibration).
int run_command(const CommandOptions& options, std::ostream& out, std::ostream& err);

}  // namespace famval
