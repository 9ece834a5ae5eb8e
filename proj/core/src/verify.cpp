#include "wtc/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "wtc/errors.hpp"

namespace wtc {

namespace {

constexpr complex kI{0.0, 1.0};
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Full Psi-series square: S_m = sum_{a+b=m} w_a w_b, all ordered pairs.
std::vector<Jet> series_square(const std::vector<Jet>& w) {
  std::vector<Jet> out;
  out.reserve(w.size());
  for (std::size_t m = 0; m < w.size(); ++m) {
    Jet acc = w[0] * w[m];
    for (std::size_t a = 1; a <= m; ++a) acc += w[a] * w[m - a];
    out.push_back(std::move(acc));
  }
  return out;
}

// Coefficient j of 2 * sq * w as Psi-series.
Jet cubic_coefficient(std::size_t j, const std::vector<Jet>& sq, const std::vector<Jet>& w) {
  Jet acc = sq[0] * w[j];
  for (std::size_t c = 0; c < j; ++c) acc += sq[j - c] * w[c];
  return 2.0 * acc;
}

// Second-derivative weights for offsets -s..s.
std::span<const double> second_derivative_weights(XStencil stencil) {
  static constexpr std::array<double, 5> w4{-1.0 / 12, 16.0 / 12, -30.0 / 12, 16.0 / 12,
                                            -1.0 / 12};
  static constexpr std::array<double, 7> w6{1.0 / 90,  -3.0 / 20, 3.0 / 2,  -49.0 / 18,
                                            3.0 / 2,   -3.0 / 20, 1.0 / 90};
  if (stencil == XStencil::sixth) return w6;
  return w4;
}

std::size_t point_count(double lo, double hi, double step) {
  return static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
}

void check_grid(const Grid& g) {
  if (!(g.dx > 0.0) || !(g.dt > 0.0)) throw PreconditionError("grid spacings must be positive");
  if (!(g.rmin > 0.0)) throw PreconditionError("grid rmin must be positive");
  if (!(g.rmax > g.rmin)) throw PreconditionError("grid rmax must exceed rmin");
  if (g.x_max < g.x_min || g.t_max < g.t_min) throw PreconditionError("grid range is reversed");
  if (!(g.tau > 0.0)) throw PreconditionError("grid trust radius must be positive");
}

void check_trust_region(const Grid& g, double t0) {
  const double reach = std::max(std::abs(g.t_min - g.dt - t0), std::abs(g.t_max + g.dt - t0));
  if (reach > g.tau * (1.0 + 1e-12)) {
    throw PreconditionError("grid leaves the jet trust region |t - t0| <= " + std::to_string(g.tau));
  }
}

double sq_abs(complex z) noexcept { return std::norm(z); }

}  // namespace

std::vector<double> coefficient_residual(const WTCSeries& series, const PotentialExpansion& exp) {
  const auto& u = series.u;
  const auto& v = series.v;
  const std::size_t n = u.size();
  const auto uu = series_square(u);
  const auto vv = series_square(v);
  const std::array<const Jet*, 3> a{&exp.a0, &exp.a1, &exp.a2};
  const std::array<const Jet*, 3> abar{&exp.abar0, &exp.abar1, &exp.abar2};
  const Jet& dpsi = exp.psi_prime;

  std::vector<double> out(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    const double jd = static_cast<double>(j);
    // i u_t + u_xx and -i v_t + v_xx at order Psi^(j-3)
    Jet lhs_u = ((jd - 1.0) * (jd - 2.0)) * u[j];
    Jet lhs_v = ((jd - 1.0) * (jd - 2.0)) * v[j];
    if (j >= 1) {
      lhs_u += (kI * (jd - 2.0)) * (u[j - 1] * dpsi);
      lhs_v -= (kI * (jd - 2.0)) * (v[j - 1] * dpsi);
    }
    if (j >= 2) {
      lhs_u += kI * differentiate(u[j - 2]);
      lhs_v -= kI * differentiate(v[j - 2]);
    }
    // 2u^2v + a u and 2uv^2 + abar v
    Jet rhs_u = cubic_coefficient(j, uu, v);
    Jet rhs_v = cubic_coefficient(j, vv, u);
    for (std::size_t k = 0; k <= 2 && k + 2 <= j; ++k) {
      rhs_u += *a[k] * u[j - k - 2];
      rhs_v += *abar[k] * v[j - k - 2];
    }
    out[j] = std::max((lhs_u - rhs_u).max_abs(), (lhs_v - rhs_v).max_abs());
  }
  return out;
}

double conjugacy_defect(const WTCSeries& series) {
  double worst = 0.0;
  for (std::size_t j = 0; j < series.u.size(); ++j) {
    const Jet& uj = series.u[j];
    worst = std::max(worst, max_abs_diff(bar(uj), series.v[j]) / std::max(1.0, uj.max_abs()));
  }
  return worst;
}

double CompatibilityDefects::max() const noexcept {
  return std::max({r_mismatch, r1_imag, R_sum, R1_real});
}

CompatibilityDefects compatibility_defects(const WTCSeries& series) {
  const auto& d = series.diagnostics;
  CompatibilityDefects c;
  if (series.N >= 3) {
    c.r_mismatch = max_abs_diff(d.r1, d.r2);
    c.r1_imag = d.r1.max_imag();
  }
  if (series.N >= 4) {
    c.R_sum = (d.R1 + d.R2).max_abs();
    c.R1_real = d.R1.max_real();
  }
  return c;
}

GrowthEstimate estimate_growth(std::span<const double> magnitudes, int first, int last,
                               int envelope) {
  if (envelope < 1) throw PreconditionError("envelope width must be at least 1");
  first = std::max(first, 0);
  last = std::min(last, static_cast<int>(magnitudes.size()) - 1);
  std::vector<double> xs, ys;
  int nonzero = 0;
  for (int j = first; j <= last; ++j) {
    const double c = magnitudes[static_cast<std::size_t>(j)];
    if (c > 0.0 && std::isfinite(c)) ++nonzero;
    double m = 0.0;
    for (int k = std::max(0, j - envelope + 1); k <= j; ++k) {
      m = std::max(m, magnitudes[static_cast<std::size_t>(k)]);
    }
    if (m > 0.0 && std::isfinite(m)) {
      xs.push_back(j);
      ys.push_back(std::log(m));
    }
  }
  GrowthEstimate g;
  g.points = static_cast<int>(xs.size());
  if (xs.empty()) {
    g.radius = kInf;
    g.r_squared = 1.0;
    return g;
  }
  if (xs.size() == 1) {
    g.growth_c = kNaN;
    g.radius = kNaN;
    g.r_squared = kNaN;
    return g;
  }
  const double n = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  const double slope = sxy / sxx;
  const double ss_res = std::max(0.0, syy - slope * sxy);
  g.growth_c = std::exp(slope);
  g.radius = std::exp(-slope);
  g.r_squared = syy > 0.0 ? 1.0 - ss_res / syy : 1.0;
  g.reliable = nonzero >= 4;
  return g;
}

GrowthEstimate estimate_growth(const WTCSeries& series) {
  if (series.N < 10) throw PreconditionError("growth estimate needs N >= 10");
  std::vector<double> mags;
  mags.reserve(series.u.size());
  for (const auto& uj : series.u) mags.push_back(std::abs(uj[0]));
  return estimate_growth(mags, series.N / 2, series.N);
}

double default_trust_radius(const PotentialSpec& spec) {
  double scale = 1.0;
  for (const Jet* f : {&spec.p0, &spec.p1, &spec.q, &spec.psi}) {
    for (int m = 1; m <= f->order(); ++m) {
      const double c = std::abs((*f)[m]);
      if (c > 0.0) scale = std::min(scale, std::pow(c, -1.0 / m));
    }
  }
  return 0.25 * scale;
}

Grid default_window(const WTCSeries& series, const PotentialSpec& spec) {
  double rho = 1.0;
  if (series.N >= 10) {
    const auto g = estimate_growth(series);
    if (g.reliable && std::isfinite(g.radius)) rho = std::min(rho, g.radius);
  }
  const double t0 = series.base();
  const double psi0 = evaluate(spec.psi, t0).real();
  Grid grid;
  grid.rmin = 0.25 * rho;
  grid.rmax = 0.5 * rho;
  grid.x_min = grid.rmin - psi0;
  grid.x_max = grid.rmax - psi0;
  grid.t_min = grid.t_max = t0;
  grid.dx = 1e-3 * rho;
  grid.dt = 1e-4 * rho;
  grid.tau = std::max(default_trust_radius(spec), 2.0 * grid.dt);
  return grid;
}

SeriesEvaluator::SeriesEvaluator(const WTCSeries& series, const Jet& psi, int n_used)
    : series_(&series), psi_(psi), n_used_(n_used) {
  if (n_used < 0 || n_used > series.N) {
    throw PreconditionError("n_used must lie in [0, N]");
  }
}

std::vector<complex> SeriesEvaluator::coefficients(double t) const {
  std::vector<complex> c(static_cast<std::size_t>(n_used_) + 1);
  for (int j = 0; j <= n_used_; ++j) c[j] = evaluate(series_->u[j], t);
  return c;
}

complex SeriesEvaluator::sum(std::span<const complex> c, double Psi) noexcept {
  complex acc = c.back();
  for (auto j = c.size() - 1; j-- > 0;) acc = acc * Psi + c[j];
  return acc / Psi;
}

complex SeriesEvaluator::operator()(double x, double t) const {
  const auto c = coefficients(t);
  return sum(c, x + psi(t));
}

namespace {

// Shared stencil walker for pointwise_residual and sample_field. Calls
// visit(x, t, Psi, u, residual, stencil_in_band) for every grid point.
template <class Visit>
void walk_grid(const WTCSeries& series, const PotentialSpec& spec, const Grid& grid, int n_used,
               XStencil stencil, double band_lo, double band_hi, Visit&& visit) {
  const SeriesEvaluator eval(series, spec.psi, n_used);
  const PotentialEvaluator potential(spec);
  const auto weights = second_derivative_weights(stencil);
  const int half = static_cast<int>(weights.size() / 2);
  const std::size_t nx = point_count(grid.x_min, grid.x_max, grid.dx);
  const std::size_t nt = point_count(grid.t_min, grid.t_max, grid.dt);
  const double inv_dx2 = 1.0 / (grid.dx * grid.dx);
  const auto in_band = [&](double Psi) {
    const double r = std::abs(Psi);
    return r >= band_lo && r <= band_hi;
  };

  for (std::size_t it = 0; it < nt; ++it) {
    const double t = grid.t_min + static_cast<double>(it) * grid.dt;
    const auto c = eval.coefficients(t);
    const auto c_fwd = eval.coefficients(t + grid.dt);
    const auto c_bwd = eval.coefficients(t - grid.dt);
    const double psi = eval.psi(t);
    const double psi_fwd = eval.psi(t + grid.dt);
    const double psi_bwd = eval.psi(t - grid.dt);

    for (std::size_t ix = 0; ix < nx; ++ix) {
      const double x = grid.x_min + static_cast<double>(ix) * grid.dx;
      const double Psi = x + psi;
      bool ok = in_band(x + psi_fwd) && in_band(x + psi_bwd);
      for (int k = -half; k <= half && ok; ++k) ok = in_band(Psi + k * grid.dx);

      const complex u = SeriesEvaluator::sum(c, Psi);
      double residual = kNaN;
      if (ok) {
        complex u_xx{};
        for (int k = -half; k <= half; ++k) {
          u_xx += weights[static_cast<std::size_t>(k + half)] *
                  (k == 0 ? u : SeriesEvaluator::sum(c, Psi + k * grid.dx));
        }
        u_xx *= inv_dx2;
        const complex u_t = (SeriesEvaluator::sum(c_fwd, x + psi_fwd) -
                             SeriesEvaluator::sum(c_bwd, x + psi_bwd)) /
                            (2.0 * grid.dt);
        const complex r = kI * u_t + u_xx - 2.0 * sq_abs(u) * u - potential(x, t) * u;
        residual = std::abs(r);
      }
      visit(x, t, Psi, u, residual, ok);
    }
  }
}

}  // namespace

PointwiseResult pointwise_residual(const WTCSeries& series, const PotentialSpec& spec,
                                   const Grid& grid, int n_used, XStencil stencil) {
  check_grid(grid);
  check_trust_region(grid, series.base());
  if (series.N >= 10) {
    const auto g = estimate_growth(series);
    if (g.reliable && grid.rmax >= g.radius) {
      throw PreconditionError("grid rmax " + std::to_string(grid.rmax) +
                              " is not below the estimated radius " + std::to_string(g.radius));
    }
  }
  PointwiseResult out;
  walk_grid(series, spec, grid, n_used, stencil, grid.rmin, grid.rmax,
            [&](double, double, double, complex, double residual, bool ok) {
              if (!ok) return;
              ++out.points;
              out.max_residual = std::max(out.max_residual, residual);
            });
  if (out.points == 0) throw PreconditionError("no grid point has its stencil inside the band");
  return out;
}

std::vector<FieldSample> sample_field(const WTCSeries& series, const PotentialSpec& spec,
                                      const Grid& grid, int n_used) {
  check_grid(grid);
  std::vector<FieldSample> rows;
  walk_grid(series, spec, grid, n_used, XStencil::fourth, grid.rmin, kInf,
            [&](double x, double t, double Psi, complex u, double residual, bool) {
              if (std::abs(Psi) < grid.rmin) return;
              rows.push_back({x, t, u, std::abs(Psi), residual});
            });
  return rows;
}

double VerificationReport::max_coeff_residual() const noexcept {
  double m = 0.0;
  for (double d : coeff_residual) m = std::max(m, d);
  return m;
}

std::vector<std::string> VerificationReport::failures(const VerifyTolerances& tol) const {
  std::vector<std::string> out;
  const auto within = [](double value, double limit) { return value <= limit; };
  for (double d : coeff_residual) {
    if (!within(d, tol.coefficient_residual)) {
      out.emplace_back("coefficient_residual");
      break;
    }
  }
  if (!within(conjugacy_defect, tol.conjugacy)) out.emplace_back("conjugacy");
  if (!within(compat.max(), tol.compatibility)) out.emplace_back("compatibility");
  if (!within(potential_identity, tol.compatibility)) out.emplace_back("potential_identity");
  return out;
}

VerificationReport verify_series(const WTCSeries& series, const PotentialSpec& spec,
                                 const std::optional<Grid>& grid) {
  const PotentialExpansion exp = expand_potential(spec);
  VerificationReport r;
  r.coeff_residual = coefficient_residual(series, exp);
  r.conjugacy_defect = conjugacy_defect(series);
  r.compat = compatibility_defects(series);
  r.potential_identity = potential_identity_defect(exp).max_abs();
  if (series.N >= 10) {
    r.growth = estimate_growth(series);
  } else {
    r.growth.growth_c = r.growth.radius = r.growth.r_squared = kNaN;
  }
  r.window = grid ? *grid : default_window(series, spec);

  std::vector<int> levels;
  for (int n = 5; n < series.N; n += 5) levels.push_back(n);
  levels.push_back(series.N);
  for (int n : levels) {
    r.pointwise.push_back({n, r.window.dx, pointwise_residual(series, spec, r.window, n).max_residual});
  }
  Grid fine = r.window;
  fine.dx *= 0.5;
  fine.dt *= 0.5;
  r.pointwise.push_back({series.N, fine.dx, pointwise_residual(series, spec, fine, series.N).max_residual});
  return r;
}

}  // namespace wtc
