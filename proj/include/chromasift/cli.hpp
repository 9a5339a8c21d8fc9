#pragma once

#include <string>
#include <vector>

#include "chromasift/config.hpp"

namespace chromasift {

// Parse the `run` subcommand's flags into a RunConfig without executing
// anything. Throws UsageError on invalid or unknown flags.
RunConfig parse_run_config(const std::vector<std::string>& args);

// Parse "R", "GB", "RGB", ... into an ordered, deduplicated channel set.
// Throws UsageError on anything else.
std::vector<Channel> parse_rule_channels(const std::string& spec);

// Full command-line entry point (everything after argv[0]). Returns the
// process exit code: 0 success, 1 error, 2 when any frame grades
// HighlyAnomalous.
int run_cli(const std::vector<std::string>& args);

} // namespace chromasift
