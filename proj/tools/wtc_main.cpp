#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "cli/commands.hpp"
#include "cli/config.hpp"

int main(int argc, char** argv) {
  using namespace wtc::cli;

  CLI::App app{"Laurent-series singular solutions of a generalized nonlinear Schroedinger equation"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = ".";
  std::optional<int> n_override;
  std::optional<std::uint64_t> seed;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "JSON run configuration");
    sub->add_option("--out", out_dir, "Output directory")->capture_default_str();
    sub->add_option("--n", n_override, "Override the truncation index N");
    sub->add_option("--seed", seed, "Use a random admissible configuration from this seed");
  };
  auto* expand = app.add_subcommand("expand", "Compute the coefficient table");
  auto* verify = app.add_subcommand("verify", "Run all verification checks");
  auto* sample = app.add_subcommand("sample", "Sample u(x, t) on a grid");
  auto* report = app.add_subcommand("report", "expand + verify + sample with a text summary");
  for (auto* sub : {expand, verify, sample, report}) add_common(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kConfigError;
  }

  RunConfig config;
  try {
    if (!config_path.empty()) {
      config = load_config(config_path);
    } else if (seed) {
      config = random_config(*seed);
    } else {
      std::cerr << "configuration error: --config or --seed is required\n";
      return kConfigError;
    }
    if (n_override) {
      if (*n_override < 5) throw ConfigError("--n", "must be at least 5");
      config.N = *n_override;
    }
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kConfigError;
  }

  if (expand->parsed()) return cmd_expand(config, out_dir, std::cout);
  if (verify->parsed()) return cmd_verify(config, out_dir, std::cout);
  if (sample->parsed()) return cmd_sample(config, out_dir, std::cout);
  return cmd_report(config, out_dir, std::cout);
}
