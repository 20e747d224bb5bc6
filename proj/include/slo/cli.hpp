#pragma once

#include <string>
#include <vector>

#include "slo/harness.hpp"

namespace slo {

/// A parsed command line.
struct CliInvocation {
    enum class Command { Run, Table, Snapshot, ListObjectives };

    Command command = Command::Run;
    ExperimentConfig experiment;

    std::string trace_path;
    std::string summary_path;
    std::string snapshot_before_path;
    std::string snapshot_after_path;
    std::string out_path;     // snapshot subcommand destination ("" = stdout)
    int snapshot_seasons = 0; // seasons to play before a `snapshot` dump
    bool check = false;       // run acceptance checks after `table`
};

/// Parses argv (without the program name). Unknown flags, malformed numbers
/// and unknown objectives raise std::invalid_argument with a usage message.
CliInvocation parse_args(const std::vector<std::string>& args);

/// Full command dispatch; returns the process exit code. Exit code 0 means
/// the requested operation completed (and, with --check, that every
/// acceptance check passed).
int run_cli(int argc, const char* const* argv);

} // namespace slo
