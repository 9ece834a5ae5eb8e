#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "wtc/jet.hpp"
#include "wtc/potential.hpp"

namespace wtc {

/// The free data of the solution family.
///
/// u0 = exp(i theta) has unit modulus by construction. s3 and s4 are the
/// arbitrary real functions Im(u3 conj(u0)) and Re(u4 conj(u0)) entering at
/// the two resonances.
struct FreeData {
  double theta = 0.0;
  Jet s3;
  Jet s4;

  complex u0() const noexcept { return std::polar(1.0, theta); }
  void validate(double base) const;

  static FreeData from_polynomials(double theta, double base, int order,
                                   std::span<const double> s3, std::span<const double> s4);
};

/// Right-hand sides of the two scalar equations produced at each resonance.
/// r1 uses the simplified closed form and r2 the full defining expression, so
/// r1 == r2 is a genuine cross-check. Likewise R1 + R2 == 0.
struct ResonanceDiagnostics {
  Jet r1, r2;
  Jet R1, R2;
};

/// Laurent coefficients u = sum u_j Psi^(j-1), v = sum v_j Psi^(j-1).
struct WTCSeries {
  int N = 0;
  int k_target = 0;
  std::vector<Jet> u;
  std::vector<Jet> v;
  std::vector<int> valid_order;
  ResonanceDiagnostics diagnostics;

  double base() const noexcept { return u.front().base(); }
};

struct GenerateOptions {
  /// Absolute tolerance on resonance compatibility, multiplied by
  /// compatibility_scale().
  double compatibility_tol = 1e-10;
  /// Relative tolerance on max |bar(u_j) - v_j| / max(1, |u_j|).
  double conjugacy_tol = 1e-9;
};

/// Input jet order needed so that every u_j, j <= N, keeps order >= k_target.
/// Each step j differentiates u_{j-2}, so coefficient j has order
/// K0 - ceil(j/2); setup costs one more (psi', q').
int plan_order_budget(int N, int k_target);

/// Multiplier applied to compatibility tolerances; grows with the magnitude
/// of the potential and free data.
double compatibility_scale(const PotentialExpansion& exp, const FreeData& free);

struct LowOrders {
  Jet u0, v0, u1, v1, u2, v2;
};

LowOrders seed_low_orders(const PotentialExpansion& exp, const FreeData& free);

struct ResonanceStep {
  Jet u, v;
  Jet rhs1, rhs2;
};

/// First resonance. Needs u[0..2], v[0..2].
ResonanceStep solve_resonance3(const PotentialExpansion& exp, const FreeData& free,
                               std::span<const Jet> u, std::span<const Jet> v,
                               double abs_tol = 1e-10);

/// Second resonance. Needs u[0..3], v[0..3].
ResonanceStep solve_resonance4(const PotentialExpansion& exp, const FreeData& free,
                               std::span<const Jet> u, std::span<const Jet> v,
                               double abs_tol = 1e-10);

/// Number of index triples (a, b, c) with a + b + c = j and all indices < j.
constexpr std::size_t triple_count(int j) noexcept {
  return j < 1 ? 0 : static_cast<std::size_t>((j - 1) * (j + 4) / 2);
}

/// B_j(u, v) = sum over those triples of 2 u_a u_b v_c. Reads u[0..j-1] and
/// v[0..j-1] only.
Jet convolution_B(int j, std::span<const Jet> u, std::span<const Jet> v);

/// Nonresonant step j >= 5: solves the 2x2 system for (u_j, v_j).
std::pair<Jet, Jet> step_j(int j, const PotentialExpansion& exp, std::span<const Jet> u,
                           std::span<const Jet> v);

/// Runs the full recursion through index N.
WTCSeries generate(const PotentialSpec& spec, const FreeData& free, int N, int k_target,
                   const GenerateOptions& options = {});

}  // namespace wtc
