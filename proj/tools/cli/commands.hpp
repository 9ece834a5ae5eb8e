#pragma once

#include <filesystem>
#include <iosfwd>

#include "cli/config.hpp"
#include "wtc/recursion.hpp"
#include "wtc/verify.hpp"

namespace wtc::cli {

/// Process exit codes.
enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kConfigError = 2 };

/// Writes the coefficient table, resonance jets and a JSON summary.
int cmd_expand(const RunConfig& config, const std::filesystem::path& out_dir, std::ostream& log);

/// Writes the verification report; kVerificationFailed if any check fails.
int cmd_verify(const RunConfig& config, const std::filesystem::path& out_dir, std::ostream& log);

/// Writes field samples over the configured grid (or the default window).
int cmd_sample(const RunConfig& config, const std::filesystem::path& out_dir, std::ostream& log);

/// expand + verify + sample, then a plain-text summary on `log`.
int cmd_report(const RunConfig& config, const std::filesystem::path& out_dir, std::ostream& log);

/// Grid from the config with its trust radius resolved, or the default window.
Grid resolve_grid(const RunConfig& config, const Problem& problem, const WTCSeries& series);

std::string report_json(const VerificationReport& report, const VerifyTolerances& tol);
void write_samples_csv(std::ostream& os, const std::vector<FieldSample>& rows);

}  // namespace wtc::cli
