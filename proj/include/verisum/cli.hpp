// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "verisum/arith.hpp"

namespace verisum {

/// Parsed command line for one verification run.
struct RunConfig {
    enum class Mode { Identities, Congruences, All };
    enum class Format { Json, Csv };

    Mode mode = Mode::All;
    Integer min_prime = 5;
    Integer max_prime = 199;
    std::size_t max_n = 60;
    std::vector<std::string> checks;  ///< empty = every registered check
    Format format = Format::Json;
    std::string out_path;  ///< empty = stdout
    int jobs = 1;
};

/// Malformed command line; cli_main maps it to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// --help was requested; carries the help text, exit code 0.
struct HelpRequested : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parses arguments (without the program name). Throws UsageError on any
/// malformed flag, unknown check id, or prime range with min < 5 or
/// min > max; throws HelpRequested for --help.
RunConfig parse_args(const std::vector<std::string>& args);

/// Runs the configured checks and writes the report. Returns 0 when every
/// record passes, 1 when any fails, 2 on I/O errors.
int execute(const RunConfig& config);

/// Full program behavior behind main().
int cli_main(int argc, char** argv);

}  // namespace verisum
