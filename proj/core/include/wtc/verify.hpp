#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wtc/jet.hpp"
#include "wtc/potential.hpp"
#include "wtc/recursion.hpp"

namespace wtc {

/// For each j = 0..N, the largest coefficient modulus of lhs - rhs of the
/// Psi^(j-3) equation, maximised over both equations of the (u, v) system.
/// Recomputed from scratch: the cubic term is formed from full Psi-series
/// products rather than from convolution_B.
std::vector<double> coefficient_residual(const WTCSeries& series, const PotentialExpansion& exp);

/// max_j |bar(u_j) - v_j| / max(1, |u_j|), coefficientwise.
double conjugacy_defect(const WTCSeries& series);

struct CompatibilityDefects {
  double r_mismatch = 0.0;  // max |r1 - r2|
  double r1_imag = 0.0;     // max |Im r1|
  double R_sum = 0.0;       // max |R1 + R2|
  double R1_real = 0.0;     // max |Re R1|

  double max() const noexcept;
};

CompatibilityDefects compatibility_defects(const WTCSeries& series);

struct GrowthEstimate {
  double growth_c = 0.0;  // |u_j(t0)| ~ growth_c^j
  double radius = 0.0;    // 1 / growth_c; +inf for a terminating series
  double r_squared = 0.0;
  int points = 0;
  bool reliable = false;
};

inline constexpr int kGrowthEnvelope = 4;

/// Least-squares slope of log e_j against j for j in [first, last], where
/// e_j = max(|c_{j-w+1}|, ..., |c_j|) is the upper envelope over `envelope`
/// consecutive magnitudes. The envelope tracks the limsup and is not fooled by
/// the near-cancellations that complex-conjugate singularity pairs cause; on
/// exactly geometric input it recovers the ratio exactly. Exact zeros are
/// skipped. Fewer than four nonzero magnitudes is flagged unreliable; none at all
/// means the series terminates (radius +inf).
GrowthEstimate estimate_growth(std::span<const double> magnitudes, int first, int last,
                               int envelope = kGrowthEnvelope);

/// Fit over |u_j(t0)| for j in [N/2, N]. Requires N >= 10.
GrowthEstimate estimate_growth(const WTCSeries& series);

/// Rectangular (x, t) sampling window. Points with |Psi| outside
/// [rmin, rmax] are skipped; dx and dt double as finite-difference steps.
struct Grid {
  double x_min = 0.0, x_max = 0.0;
  double t_min = 0.0, t_max = 0.0;
  double dx = 1e-2, dt = 1e-3;
  double rmin = 0.0, rmax = 0.0;
  /// Largest |t - t0| at which the jets are trusted.
  double tau = 0.25;
};

/// Trust radius in t from the input polynomial scale: 0.25 * min(1, |c_m|^(-1/m)).
double default_trust_radius(const PotentialSpec& spec);

/// Window |Psi| in [rho/4, rho/2] on the positive side of the singular curve
/// at t = t0, with steps scaled by rho (rho = estimated radius, capped at 1).
Grid default_window(const WTCSeries& series, const PotentialSpec& spec);

enum class XStencil { fourth = 4, sixth = 6 };

/// Evaluates u(x, t) = sum_{j <= n_used} u_j(t) Psi^(j-1) for real (x, t).
class SeriesEvaluator {
 public:
  SeriesEvaluator(const WTCSeries& series, const Jet& psi, int n_used);

  double psi(double t) const { return evaluate(psi_, t).real(); }
  /// u_j(t) for j = 0..n_used.
  std::vector<complex> coefficients(double t) const;
  /// Horner in Psi over precomputed coefficients.
  static complex sum(std::span<const complex> coefficients, double Psi) noexcept;
  complex operator()(double x, double t) const;

 private:
  const WTCSeries* series_;
  Jet psi_;
  int n_used_;
};

struct PointwiseResult {
  double max_residual = 0.0;
  std::size_t points = 0;
};

/// Finite-difference residual of i u_t + u_xx - 2|u|^2 u - a u over the grid
/// points whose whole stencil lies in the band rmin <= |Psi| <= rmax.
/// Central differences: 4th (or 6th) order in x, 2nd order in t.
PointwiseResult pointwise_residual(const WTCSeries& series, const PotentialSpec& spec,
                                   const Grid& grid, int n_used,
                                   XStencil stencil = XStencil::fourth);

struct FieldSample {
  double x, t;
  complex u;
  double abs_psi;
  double residual;  // NaN where the stencil reaches |Psi| < rmin
};

/// All grid points with |Psi| >= rmin, row-major in t then x.
std::vector<FieldSample> sample_field(const WTCSeries& series, const PotentialSpec& spec,
                                      const Grid& grid, int n_used);

struct PointwiseEntry {
  int n_used = 0;
  double spacing = 0.0;
  double max_residual = 0.0;
};

struct VerifyTolerances {
  double coefficient_residual = 1e-10;
  double conjugacy = 1e-9;
  double compatibility = 1e-9;
};

struct VerificationReport {
  std::vector<double> coeff_residual;
  double conjugacy_defect = 0.0;
  CompatibilityDefects compat;
  double potential_identity = 0.0;
  GrowthEstimate growth;
  Grid window;
  std::vector<PointwiseEntry> pointwise;

  double max_coeff_residual() const noexcept;
  /// Names of failed checks; empty when everything is within tolerance.
  std::vector<std::string> failures(const VerifyTolerances& tol) const;
};

/// Runs every check. Without a grid, default_window() is used.
VerificationReport verify_series(const WTCSeries& series, const PotentialSpec& spec,
                                 const std::optional<Grid>& grid = std::nullopt);

}  // namespace wtc
