#include "cli/commands.hpp"

#include <cmath>
#include <fstream>
#include <ostream>

#include "json.hpp"
#include "wtc/errors.hpp"
#include "wtc/io.hpp"

namespace wtc::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::ofstream open_out(const fs::path& dir, const std::string& name) {
  fs::create_directories(dir);
  std::ofstream out(dir / name, std::ios::binary);
  if (!out) throw ConfigError("--out", "cannot write '" + (dir / name).string() + "'");
  return out;
}

json number(double x) {
  if (std::isfinite(x)) return x;
  if (std::isnan(x)) return "nan";
  return x > 0 ? "inf" : "-inf";
}

// Maps library failures onto the exit-status contract.
template <class Body>
int guarded(std::ostream& log, Body&& body) {
  try {
    return body();
  } catch (const ConfigError& e) {
    log << "configuration error: " << e.what() << '\n';
    return kConfigError;
  } catch (const InsufficientOrder& e) {
    log << "order budget error: " << e.what() << '\n';
    return kConfigError;
  } catch (const PreconditionError& e) {
    log << "invalid input: " << e.what() << '\n';
    return kConfigError;
  } catch (const StructuralError& e) {
    log << "invalid input: " << e.what() << '\n';
    return kConfigError;
  } catch (const InternalInconsistency& e) {
    log << "verification failed: " << e.what() << '\n';
    return kVerificationFailed;
  }
}

struct Run {
  Problem problem;
  WTCSeries series;
};

Run run(const RunConfig& config) {
  Problem p = build_problem(config);
  WTCSeries s = generate(p.spec, p.free, config.N, config.k_target, config.generate);
  return {std::move(p), std::move(s)};
}

void write_expand(const RunConfig& config, const Run& r, const fs::path& out_dir) {
  {
    auto out = open_out(out_dir, config.outputs.coefficients);
    write_coefficients_csv(out, r.series);
  }
  {
    auto out = open_out(out_dir, config.outputs.resonances);
    write_resonances_csv(out, r.series.diagnostics);
  }
  json summary;
  summary["N"] = r.series.N;
  summary["K_target"] = r.series.k_target;
  summary["t0"] = config.t0;
  summary["order_budget"] = plan_order_budget(config.N, config.k_target);
  json rows = json::array();
  for (int j = 0; j <= r.series.N; ++j) {
    rows.push_back({{"j", j},
                    {"valid_order", r.series.valid_order[j]},
                    {"abs_u_t0", number(std::abs(r.series.u[j][0]))}});
  }
  summary["coefficients"] = rows;
  const auto c = compatibility_defects(r.series);
  summary["resonances"] = {{"max_abs_r1_minus_r2", number(c.r_mismatch)},
                           {"max_abs_im_r1", number(c.r1_imag)},
                           {"max_abs_R1_plus_R2", number(c.R_sum)},
                           {"max_abs_re_R1", number(c.R1_real)}};
  auto out = open_out(out_dir, config.outputs.summary);
  out << summary.dump(2) << '\n';
}

}  // namespace

Grid resolve_grid(const RunConfig& config, const Problem& problem, const WTCSeries& series) {
  if (!config.grid) return default_window(series, problem.spec);
  Grid g = *config.grid;
  if (!(g.tau > 0.0)) g.tau = default_trust_radius(problem.spec);
  return g;
}

std::string report_json(const VerificationReport& r, const VerifyTolerances& tol) {
  json j;
  json residual = json::array();
  for (double d : r.coeff_residual) residual.push_back(number(d));
  j["coefficient_residual"] = residual;
  j["max_coefficient_residual"] = number(r.max_coeff_residual());
  j["conjugacy_defect"] = number(r.conjugacy_defect);
  j["compatibility"] = {{"max_abs_r1_minus_r2", number(r.compat.r_mismatch)},
                        {"max_abs_im_r1", number(r.compat.r1_imag)},
                        {"max_abs_R1_plus_R2", number(r.compat.R_sum)},
                        {"max_abs_re_R1", number(r.compat.R1_real)}};
  j["potential_identity_defect"] = number(r.potential_identity);
  j["growth"] = {{"growth_c", number(r.growth.growth_c)},
                 {"radius_estimate", number(r.growth.radius)},
                 {"r_squared", number(r.growth.r_squared)},
                 {"points", r.growth.points},
                 {"reliable", r.growth.reliable}};
  const Grid& g = r.window;
  j["window"] = {{"x", {g.x_min, g.x_max}}, {"t", {g.t_min, g.t_max}}, {"dx", g.dx},
                 {"dt", g.dt},             {"rmin", g.rmin},            {"rmax", g.rmax},
                 {"tau", g.tau}};
  json table = json::array();
  for (const auto& e : r.pointwise) {
    table.push_back({{"N", e.n_used}, {"grid_spacing", e.spacing},
                     {"max_residual", number(e.max_residual)}});
  }
  j["pointwise_residuals"] = table;
  j["tolerances"] = {{"coefficient_residual", tol.coefficient_residual},
                     {"conjugacy", tol.conjugacy},
                     {"compatibility", tol.compatibility}};
  const auto failed = r.failures(tol);
  j["failures"] = failed;
  j["status"] = failed.empty() ? "pass" : "fail";
  return j.dump(2) + "\n";
}

void write_samples_csv(std::ostream& os, const std::vector<FieldSample>& rows) {
  os << "x,t,re_u,im_u,abs_u,abs_psi,residual\n";
  for (const auto& r : rows) {
    os << format_double(r.x) << ',' << format_double(r.t) << ',' << format_double(r.u.real())
       << ',' << format_double(r.u.imag()) << ',' << format_double(std::abs(r.u)) << ','
       << format_double(r.abs_psi) << ',' << format_double(r.residual) << '\n';
  }
}

int cmd_expand(const RunConfig& config, const fs::path& out_dir, std::ostream& log) {
  return guarded(log, [&] {
    const Run r = run(config);
    write_expand(config, r, out_dir);
    log << "expand: wrote " << r.series.N + 1 << " coefficient pairs to "
        << (out_dir / config.outputs.coefficients).string() << '\n';
    return kOk;
  });
}

int cmd_verify(const RunConfig& config, const fs::path& out_dir, std::ostream& log) {
  return guarded(log, [&] {
    const Run r = run(config);
    const Grid grid = resolve_grid(config, r.problem, r.series);
    const VerificationReport report = verify_series(r.series, r.problem.spec, grid);
    auto out = open_out(out_dir, config.outputs.report);
    out << report_json(report, config.tolerances);
    const auto failed = report.failures(config.tolerances);
    for (const auto& f : failed) log << "verify: check failed: " << f << '\n';
    if (failed.empty()) log << "verify: all checks passed\n";
    return failed.empty() ? kOk : kVerificationFailed;
  });
}

int cmd_sample(const RunConfig& config, const fs::path& out_dir, std::ostream& log) {
  return guarded(log, [&] {
    const Run r = run(config);
    const Grid grid = resolve_grid(config, r.problem, r.series);
    const auto rows = sample_field(r.series, r.problem.spec, grid, r.series.N);
    auto out = open_out(out_dir, config.outputs.samples);
    write_samples_csv(out, rows);
    log << "sample: wrote " << rows.size() << " rows\n";
    return kOk;
  });
}

int cmd_report(const RunConfig& config, const fs::path& out_dir, std::ostream& log) {
  return guarded(log, [&] {
    const Run r = run(config);
    write_expand(config, r, out_dir);
    const Grid grid = resolve_grid(config, r.problem, r.series);
    const VerificationReport report = verify_series(r.series, r.problem.spec, grid);
    {
      auto out = open_out(out_dir, config.outputs.report);
      out << report_json(report, config.tolerances);
    }
    {
      auto out = open_out(out_dir, config.outputs.samples);
      write_samples_csv(out, sample_field(r.series, r.problem.spec, grid, r.series.N));
    }
    const auto failed = report.failures(config.tolerances);
    log << "N = " << r.series.N << ", K_target = " << r.series.k_target
        << ", order budget = " << plan_order_budget(config.N, config.k_target) << '\n'
        << "max coefficient residual  " << report.max_coeff_residual() << '\n'
        << "conjugacy defect          " << report.conjugacy_defect << '\n'
        << "compatibility defect      " << report.compat.max() << '\n'
        << "potential identity defect " << report.potential_identity << '\n'
        << "growth constant           " << report.growth.growth_c << '\n'
        << "radius estimate           " << report.growth.radius << " (R^2 "
        << report.growth.r_squared << ")\n";
    for (const auto& e : report.pointwise) {
      log << "pointwise residual N=" << e.n_used << " h=" << e.spacing << "  " << e.max_residual
          << '\n';
    }
    log << (failed.empty() ? "status: pass" : "status: FAIL") << '\n';
    return failed.empty() ? kOk : kVerificationFailed;
  });
}

}  // namespace wtc::cli
