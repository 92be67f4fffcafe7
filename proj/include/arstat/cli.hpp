#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arstat/report.hpp"

namespace arstat {

enum class Command { build, verify, spectrum, coherent, measure_check, robertson };
enum class Format { json, csv };

std::optional<Command> parse_command(std::string_view name);
const char* to_string(Command c) noexcept;

/// Named tolerances and their defaults:
///   exact 1e-12, interior 1e-10, moment 1e-6, moment_tail 1e-12,
///   coherent_tail 1e-12, robertson_block 1e-8, robertson_gap 1e-8,
///   bose_ratio 0.2
std::map<std::string, double> default_tolerances();

struct RunConfig {
    RepSpec spec;
    Command command = Command::build;
    std::map<std::string, double> tolerances = default_tolerances();
    std::optional<std::string> output_path;
    Format format = Format::json;

    // Command-specific inputs read from the same config document.
    std::vector<cplx> omega;
    std::optional<int> degree_cap;
    int moment_max_total = 5;
    std::optional<double> r_cut;

    double tol(const std::string& name) const;
};

/// Builds a validated RunConfig from the config document plus command-line
/// overrides ("name=value" strings). Throws ConfigError or InvalidParameter.
RunConfig make_run_config(Command command, const json& config, std::optional<std::string> output_path,
                          std::optional<Format> format, const std::vector<std::string>& tol_overrides);

struct RunResult {
    int status = 0;  // 0 all checks pass, 1 some check failed
    std::string report;
    std::vector<std::string> failures;
};

/// Runs the command and renders its report. Library errors propagate.
RunResult execute(const RunConfig& config);

/// Full command-line entry point: argument parsing, config loading,
/// execution and report writing. Returns the process exit status
/// (2 for invalid input, 1 for failed checks, 0 otherwise).
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arstat
