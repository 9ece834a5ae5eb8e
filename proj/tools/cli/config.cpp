#include "cli/config.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"

namespace wtc::cli {

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, const std::string& where, std::set<std::string> known) {
  for (const auto& [key, _] : obj.items()) {
    if (!known.count(key)) throw ConfigError(where.empty() ? key : where + "." + key, "unknown key");
  }
}

const json& require(const json& obj, const std::string& where, const std::string& key) {
  if (!obj.contains(key)) throw ConfigError(where.empty() ? key : where + "." + key, "missing");
  return obj.at(key);
}

double as_number(const json& j, const std::string& field) {
  if (!j.is_number()) throw ConfigError(field, "expected a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) throw ConfigError(field, "must be finite");
  return x;
}

int as_int(const json& j, const std::string& field) {
  if (!j.is_number_integer()) throw ConfigError(field, "expected an integer");
  return j.get<int>();
}

double as_positive(const json& j, const std::string& field) {
  const double x = as_number(j, field);
  if (!(x > 0.0)) throw ConfigError(field, "must be positive");
  return x;
}

std::vector<double> as_poly(const json& j, const std::string& field) {
  if (!j.is_array()) throw ConfigError(field, "expected an array of real coefficients");
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(as_number(j[i], field + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::pair<double, double> as_range(const json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 2) throw ConfigError(field, "expected [lo, hi]");
  const double lo = as_number(j[0], field + "[0]");
  const double hi = as_number(j[1], field + "[1]");
  if (hi < lo) throw ConfigError(field, "range is reversed");
  return {lo, hi};
}

Grid parse_grid(const json& g) {
  if (!g.is_object()) throw ConfigError("grid", "expected an object");
  reject_unknown(g, "grid", {"x", "t", "dx", "dt", "rmin", "rmax", "tau"});
  Grid grid;
  std::tie(grid.x_min, grid.x_max) = as_range(require(g, "grid", "x"), "grid.x");
  std::tie(grid.t_min, grid.t_max) = as_range(require(g, "grid", "t"), "grid.t");
  grid.dx = as_positive(require(g, "grid", "dx"), "grid.dx");
  grid.dt = as_positive(require(g, "grid", "dt"), "grid.dt");
  grid.rmin = as_positive(require(g, "grid", "rmin"), "grid.rmin");
  grid.rmax = as_positive(require(g, "grid", "rmax"), "grid.rmax");
  if (grid.rmax <= grid.rmin) throw ConfigError("grid.rmax", "must exceed rmin");
  grid.tau = g.contains("tau") ? as_positive(g.at("tau"), "grid.tau") : -1.0;
  return grid;
}

}  // namespace

RunConfig parse_config(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError("<document>", e.what());
  }
  if (!root.is_object()) throw ConfigError("<document>", "expected a JSON object");
  reject_unknown(root, "", {"t0", "theta", "potential", "s3", "s4", "N", "K_target", "tolerances",
                            "grid", "outputs"});

  RunConfig c;
  if (root.contains("t0")) c.t0 = as_number(root["t0"], "t0");
  if (root.contains("theta")) c.theta = as_number(root["theta"], "theta");

  const json& pot = require(root, "", "potential");
  if (!pot.is_object()) throw ConfigError("potential", "expected an object");
  reject_unknown(pot, "potential", {"p0", "p1", "q", "psi"});
  c.p0 = as_poly(require(pot, "potential", "p0"), "potential.p0");
  c.p1 = as_poly(require(pot, "potential", "p1"), "potential.p1");
  c.q = as_poly(require(pot, "potential", "q"), "potential.q");
  c.psi = as_poly(require(pot, "potential", "psi"), "potential.psi");
  if (root.contains("s3")) c.s3 = as_poly(root["s3"], "s3");
  if (root.contains("s4")) c.s4 = as_poly(root["s4"], "s4");

  if (root.contains("N")) c.N = as_int(root["N"], "N");
  if (root.contains("K_target")) c.k_target = as_int(root["K_target"], "K_target");
  if (c.N < 5) throw ConfigError("N", "must be at least 5");
  if (c.k_target < 0) throw ConfigError("K_target", "must be nonnegative");

  if (root.contains("tolerances")) {
    const json& t = root["tolerances"];
    if (!t.is_object()) throw ConfigError("tolerances", "expected an object");
    reject_unknown(t, "tolerances", {"coefficient_residual", "conjugacy", "compatibility"});
    if (t.contains("coefficient_residual")) {
      c.tolerances.coefficient_residual =
          as_positive(t["coefficient_residual"], "tolerances.coefficient_residual");
    }
    if (t.contains("conjugacy")) {
      c.tolerances.conjugacy = as_positive(t["conjugacy"], "tolerances.conjugacy");
      c.generate.conjugacy_tol = c.tolerances.conjugacy;
    }
    if (t.contains("compatibility")) {
      c.tolerances.compatibility = as_positive(t["compatibility"], "tolerances.compatibility");
      c.generate.compatibility_tol = c.tolerances.compatibility;
    }
  }

  if (root.contains("grid")) c.grid = parse_grid(root["grid"]);

  if (root.contains("outputs")) {
    const json& o = root["outputs"];
    if (!o.is_object()) throw ConfigError("outputs", "expected an object");
    reject_unknown(o, "outputs", {"coefficients", "resonances", "summary", "report", "samples"});
    const auto path = [&](const char* key, std::string& dst) {
      if (!o.contains(key)) return;
      if (!o[key].is_string()) throw ConfigError(std::string("outputs.") + key, "expected a string");
      dst = o[key].get<std::string>();
    };
    path("coefficients", c.outputs.coefficients);
    path("resonances", c.outputs.resonances);
    path("summary", c.outputs.summary);
    path("report", c.outputs.report);
    path("samples", c.outputs.samples);
  }
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("--config", "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string dump_config(const RunConfig& c) {
  json root;
  root["t0"] = c.t0;
  root["theta"] = c.theta;
  root["potential"] = {{"p0", c.p0}, {"p1", c.p1}, {"q", c.q}, {"psi", c.psi}};
  root["s3"] = c.s3;
  root["s4"] = c.s4;
  root["N"] = c.N;
  root["K_target"] = c.k_target;
  root["tolerances"] = {{"coefficient_residual", c.tolerances.coefficient_residual},
                        {"conjugacy", c.tolerances.conjugacy},
                        {"compatibility", c.tolerances.compatibility}};
  if (c.grid) {
    const Grid& g = *c.grid;
    root["grid"] = {{"x", {g.x_min, g.x_max}}, {"t", {g.t_min, g.t_max}}, {"dx", g.dx},
                    {"dt", g.dt},           {"rmin", g.rmin},            {"rmax", g.rmax}};
    if (g.tau > 0.0) root["grid"]["tau"] = g.tau;
  }
  return root.dump(2) + "\n";
}

RunConfig random_config(std::uint64_t seed, int N, int k_target) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  std::uniform_int_distribution<int> degree(0, 4);
  const auto poly = [&] {
    std::vector<double> p(static_cast<std::size_t>(degree(rng)) + 1);
    for (auto& c : p) c = coef(rng);
    return p;
  };
  RunConfig c;
  c.N = N;
  c.k_target = k_target;
  c.theta = std::uniform_real_distribution<double>(0.0, 2.0 * std::numbers::pi)(rng);
  c.p0 = poly();
  c.p1 = poly();
  c.q = poly();
  c.psi = poly();
  c.s3 = poly();
  c.s4 = poly();
  return c;
}

Problem build_problem(const RunConfig& c) {
  const int order = plan_order_budget(c.N, c.k_target);
  return {PotentialSpec::from_polynomials(c.t0, order, c.p0, c.p1, c.q, c.psi),
          FreeData::from_polynomials(c.theta, c.t0, order, c.s3, c.s4)};
}

}  // namespace wtc::cli
