#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wtc/potential.hpp"
#include "wtc/recursion.hpp"
#include "wtc/verify.hpp"

namespace wtc::cli {

/// Invalid or incomplete run configuration. field() names the offending key
/// path, e.g. "potential.q".
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& what)
      : std::runtime_error(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

struct OutputPaths {
  std::string coefficients = "coefficients.csv";
  std::string resonances = "resonances.csv";
  std::string summary = "expand_summary.json";
  std::string report = "report.json";
  std::string samples = "samples.csv";
};

/// Polynomials are coefficient lists in ascending powers of (t - t0).
struct RunConfig {
  double t0 = 0.0;
  double theta = 0.0;
  std::vector<double> p0, p1, q, psi;
  std::vector<double> s3, s4;
  int N = 30;
  int k_target = 4;
  VerifyTolerances tolerances;
  GenerateOptions generate;
  std::optional<Grid> grid;
  OutputPaths outputs;
};

RunConfig parse_config(const std::string& json_text);
RunConfig load_config(const std::string& path);
std::string dump_config(const RunConfig& config);

/// Random admissible configuration: every polynomial has degree <= 4 with
/// coefficients uniform in [-1, 1]; theta uniform in [0, 2 pi).
RunConfig random_config(std::uint64_t seed, int N = 30, int k_target = 4);

struct Problem {
  PotentialSpec spec;
  FreeData free;
};

/// Builds input jets at exactly the planned order budget.
Problem build_problem(const RunConfig& config);

}  // namespace wtc::cli
