#include "wtc/recursion.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "wtc/errors.hpp"

namespace wtc {

namespace {

constexpr complex kI{0.0, 1.0};

void require_size(std::span<const Jet> u, std::span<const Jet> v, std::size_t n, const char* who) {
  if (u.size() < n || v.size() < n) {
    throw PreconditionError(std::string(who) + ": needs coefficients 0.." + std::to_string(n - 1));
  }
}

[[noreturn]] void inconsistent(const char* what, double defect, double tol) {
  std::ostringstream os;
  os << what << " violated: defect " << defect << " exceeds " << tol;
  throw InternalInconsistency(os.str());
}

// Pair sums P_m = sum_{a+b=m} w_a w_b, using the symmetry of the summand.
Jet pair_sum(int m, std::span<const Jet> w) {
  Jet acc = w[0] * w[m];
  for (int a = 1; 2 * a < m; ++a) acc += w[a] * w[m - a];
  acc *= complex(2.0);
  if (m % 2 == 0 && m > 0) acc += w[m / 2] * w[m / 2];
  return acc;
}

}  // namespace

void FreeData::validate(double base) const {
  if (!s3.is_real() || !s4.is_real()) {
    throw PreconditionError("free functions s3 and s4 must be real-valued");
  }
  if (s3.base() != base || s4.base() != base) {
    throw StructuralError("free functions must share the potential's base point");
  }
}

FreeData FreeData::from_polynomials(double theta, double base, int order,
                                    std::span<const double> s3, std::span<const double> s4) {
  return FreeData{theta, Jet::polynomial(base, order, s3), Jet::polynomial(base, order, s4)};
}

int plan_order_budget(int N, int k_target) {
  if (N < 0 || k_target < 0) throw PreconditionError("order budget needs N >= 0 and K >= 0");
  return k_target + (N + 1) / 2 + 2;
}

double compatibility_scale(const PotentialExpansion& exp, const FreeData& free) {
  const double s = std::max({1.0, exp.scale(), free.s3.max_abs(), free.s4.max_abs()});
  return s * s * s;
}

LowOrders seed_low_orders(const PotentialExpansion& exp, const FreeData& free) {
  const double base = exp.phi.base();
  const int order = exp.phi.order() + 1;
  LowOrders lo;
  lo.u0 = Jet::constant(base, order, free.u0());
  lo.v0 = Jet::constant(base, order, std::conj(free.u0()));
  const Jet& phi = exp.phi;
  const Jet phi2 = phi * phi;
  lo.u1 = -(lo.u0 * phi);
  lo.v1 = lo.v0 * phi;
  lo.u2 = (1.0 / 6.0) * lo.u0 * (2.0 * phi2 - 2.0 * exp.a0 + exp.abar0);
  lo.v2 = (1.0 / 6.0) * lo.v0 * (2.0 * phi2 + exp.a0 - 2.0 * exp.abar0);
  return lo;
}

ResonanceStep solve_resonance3(const PotentialExpansion& exp, const FreeData& free,
                               std::span<const Jet> u, std::span<const Jet> v, double abs_tol) {
  require_size(u, v, 3, "solve_resonance3");
  const Jet& phi = exp.phi;

  // -4 Re(u3 v0) = r1, in closed form.
  Jet r1 = kI * differentiate(phi) - exp.a0 * phi + exp.abar0 * phi + exp.a1;
  // Second equation of the pair multiplied through by u0, unsimplified.
  Jet r2 = kI * (u[0] * differentiate(v[1])) + kI * (u[0] * v[2] * exp.psi_prime) +
           u[0] * convolution_B(3, v, u) + exp.abar0 * u[0] * v[1] + exp.abar1;

  const double mismatch = max_abs_diff(r1, r2);
  if (mismatch > abs_tol) inconsistent("first resonance compatibility r1 = r2", mismatch, abs_tol);
  if (r1.max_imag() > abs_tol) inconsistent("reality of r1", r1.max_imag(), abs_tol);

  ResonanceStep out;
  out.u = u[0] * (-0.25 * real_part(r1) + kI * free.s3);
  out.v = bar(out.u);
  out.rhs1 = std::move(r1);
  out.rhs2 = std::move(r2);
  return out;
}

ResonanceStep solve_resonance4(const PotentialExpansion& exp, const FreeData& free,
                               std::span<const Jet> u, std::span<const Jet> v, double abs_tol) {
  require_size(u, v, 4, "solve_resonance4");
  const Jet& dpsi = exp.psi_prime;
  const Jet potential_u = (exp.a0 * u[2] + exp.a1 * u[1] + exp.a2 * u[0]) * v[0];
  const Jet potential_v = (exp.abar0 * v[2] + exp.abar1 * v[1] + exp.abar2 * v[0]) * u[0];

  Jet R1 = -kI * (differentiate(u[2]) * v[0]) - 2.0 * kI * (u[3] * v[0] * dpsi) +
           v[0] * convolution_B(4, u, v) + potential_u;
  Jet R2 = kI * (u[0] * differentiate(v[2])) + 2.0 * kI * (u[0] * v[3] * dpsi) +
           u[0] * convolution_B(4, v, u) + potential_v;

  const double sum = (R1 + R2).max_abs();
  if (sum > abs_tol) inconsistent("second resonance compatibility R1 + R2 = 0", sum, abs_tol);
  if (R1.max_real() > abs_tol) inconsistent("R1 purely imaginary", R1.max_real(), abs_tol);

  // 4i Im(u4 v0) = R1 and Re(u4 v0) = s4.
  const Jet im_u4v0 = 0.25 * imag_part(R1);
  ResonanceStep out;
  out.u = u[0] * (free.s4 + kI * im_u4v0);
  out.v = bar(out.u);
  out.rhs1 = std::move(R1);
  out.rhs2 = std::move(R2);
  return out;
}

Jet convolution_B(int j, std::span<const Jet> u, std::span<const Jet> v) {
  if (j < 1) throw PreconditionError("convolution_B needs j >= 1");
  require_size(u, v, static_cast<std::size_t>(j), "convolution_B");
  const double base = u[0].base();
  if (j == 1) return Jet::zero(base, std::min(u[0].order(), v[0].order()));

  // c = 0 term: pairs (a, b) with a + b = j, both in 1..j-1.
  Jet tail = u[1] * u[j - 1];
  for (int a = 2; a < j; ++a) tail += u[a] * u[j - a];
  Jet acc = tail * v[0];
  for (int c = 1; c < j; ++c) acc += pair_sum(j - c, u) * v[c];
  return 2.0 * acc;
}

std::pair<Jet, Jet> step_j(int j, const PotentialExpansion& exp, std::span<const Jet> u,
                           std::span<const Jet> v) {
  if (j < 5) throw PreconditionError("step_j applies to nonresonant indices j >= 5");
  require_size(u, v, static_cast<std::size_t>(j), "step_j");
  if (u[j - 2].order() < 1 || v[j - 2].order() < 1) {
    throw InsufficientOrder("step " + std::to_string(j) + ": coefficient " + std::to_string(j - 2) +
                            " has no derivative left");
  }
  const double jd = j;
  const Jet& dpsi = exp.psi_prime;

  Jet F = convolution_B(j, u, v) - kI * differentiate(u[j - 2]) -
          (kI * (jd - 2.0)) * (u[j - 1] * dpsi) + exp.a0 * u[j - 2] + exp.a1 * u[j - 3] +
          exp.a2 * u[j - 4];
  Jet G = convolution_B(j, v, u) + kI * differentiate(v[j - 2]) +
          (kI * (jd - 2.0)) * (v[j - 1] * dpsi) + exp.abar0 * v[j - 2] + exp.abar1 * v[j - 3] +
          exp.abar2 * v[j - 4];

  const double det = (jd + 1.0) * jd * (jd - 3.0) * (jd - 4.0);
  const double diag = (jd * jd - 3.0 * jd - 2.0) / det;
  const complex u0 = u[0][0];
  const complex v0 = v[0][0];
  const complex off_u = 2.0 * u0 * u0 / det;
  const complex off_v = 2.0 * v0 * v0 / det;
  Jet uj = diag * F + off_u * G;
  Jet vj = off_v * F + diag * G;
  return {std::move(uj), std::move(vj)};
}

WTCSeries generate(const PotentialSpec& spec, const FreeData& free, int N, int k_target,
                   const GenerateOptions& options) {
  const int budget = plan_order_budget(N, k_target);
  spec.validate();
  free.validate(spec.base());
  const int have = std::min({spec.order(), free.s3.order(), free.s4.order()});
  if (have < budget) {
    throw InsufficientOrder("input jets have order " + std::to_string(have) + ", N = " +
                                std::to_string(N) + " with K_target = " +
                                std::to_string(k_target) + " needs order " +
                                std::to_string(budget),
                            budget);
  }

  const PotentialExpansion exp = expand_potential(spec);
  const double compat_tol = options.compatibility_tol * compatibility_scale(exp, free);

  WTCSeries s;
  s.N = N;
  s.k_target = k_target;
  s.u.reserve(static_cast<std::size_t>(N) + 1);
  s.v.reserve(static_cast<std::size_t>(N) + 1);

  LowOrders lo = seed_low_orders(exp, free);
  s.u = {lo.u0, lo.u1, lo.u2};
  s.v = {lo.v0, lo.v1, lo.v2};
  if (N >= 3) {
    auto r = solve_resonance3(exp, free, s.u, s.v, compat_tol);
    s.u.push_back(std::move(r.u));
    s.v.push_back(std::move(r.v));
    s.diagnostics.r1 = std::move(r.rhs1);
    s.diagnostics.r2 = std::move(r.rhs2);
  }
  if (N >= 4) {
    auto r = solve_resonance4(exp, free, s.u, s.v, compat_tol);
    s.u.push_back(std::move(r.u));
    s.v.push_back(std::move(r.v));
    s.diagnostics.R1 = std::move(r.rhs1);
    s.diagnostics.R2 = std::move(r.rhs2);
  }
  for (int j = 5; j <= N; ++j) {
    auto [uj, vj] = step_j(j, exp, s.u, s.v);
    s.u.push_back(std::move(uj));
    s.v.push_back(std::move(vj));
  }
  s.u.resize(static_cast<std::size_t>(N) + 1);
  s.v.resize(static_cast<std::size_t>(N) + 1);

  for (int j = 0; j <= N; ++j) {
    const Jet& uj = s.u[j];
    const double defect = max_abs_diff(bar(uj), s.v[j]) / std::max(1.0, uj.max_abs());
    if (defect > options.conjugacy_tol) {
      inconsistent(("conjugacy of coefficient " + std::to_string(j)).c_str(), defect,
                   options.conjugacy_tol);
    }
    s.valid_order.push_back(std::min(uj.order(), s.v[j].order()));
  }
  return s;
}

}  // namespace wtc
