// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "cli/config.hpp"
#include "oracle/triple_sum.hpp"
#include "support/generators.hpp"
#include "wtc/recursion.hpp"
#include "wtc/verify.hpp"

using namespace wtc;

namespace {

constexpr int kCorpus = 120;

int failures = 0;

void report(int id, bool ok, const std::string& what) {
  std::printf("criterion %d: %s  %s\n", id, ok ? "PASS" : "FAIL", what.c_str());
  if (!ok) ++failures;
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

struct Run {
  PotentialSpec spec;
  FreeData free;
  WTCSeries series;
};

Run run(const cli::RunConfig& cfg) {
  auto p = cli::build_problem(cfg);
  auto s = generate(p.spec, p.free, cfg.N, cfg.k_target);
  return {std::move(p.spec), std::move(p.free), std::move(s)};
}

double max_of(const std::vector<double>& v) {
  return v.empty() ? 0.0 : *std::max_element(v.begin(), v.end());
}

void exact_solution() {
  cli::RunConfig cfg;
  cfg.N = 40;
  cfg.k_target = 2;
  const auto r = run(cfg);
  double coeff = 0.0;
  for (int j = 1; j <= 40; ++j) {
    coeff = std::max({coeff, r.series.u[j].max_abs(), r.series.v[j].max_abs()});
  }
  const SeriesEvaluator eval(r.series, r.spec.psi, 40);
  double dev = 0.0;
  for (int k = 0; k <= 100; ++k) {
    const double x = 0.5 + 1e-2 * k;
    dev = std::max(dev, std::abs(std::abs(eval(x, 0.0)) - 1.0 / x));
  }
  report(1, coeff <= 1e-12 && dev <= 1e-6,
         "1/x series: max |u_j|, |v_j| (j>=1) = " + sci(coeff) + ", max ||u| - 1/x| = " + sci(dev));
}

struct CorpusCheck {
  bool ok = true;
  double worst = 0.0;
  void add(double value, double limit) {
    worst = std::max(worst, value);
    ok = ok && value <= limit;
  }
};

void corpus() {
  CorpusCheck compat, conj, resid;
  bool mutation_ok = true;
  double weakest_mutation = INFINITY;
  testing::Gen pick(2024);
  for (int i = 0; i < kCorpus; ++i) {
    const auto r = run(cli::random_config(static_cast<std::uint64_t>(i) + 1, 30, 4));
    const auto c = compatibility_defects(r.series);
    for (double d : {c.r_mismatch, c.r1_imag, c.R_sum, c.R1_real}) compat.add(d, 1e-9);
    conj.add(conjugacy_defect(r.series), 1e-9);
    const auto exp = expand_potential(r.spec);
    resid.add(max_of(coefficient_residual(r.series, exp)), 1e-10);

    const int j = pick.integer(1, 30);
    auto m = r.series;
    m.u[j] += Jet::constant(m.base(), m.u[j].order(), 1e-3 * std::max(1.0, m.u[j].max_abs()));
    const double d = coefficient_residual(m, exp)[static_cast<std::size_t>(j)];
    weakest_mutation = std::min(weakest_mutation, d);
    mutation_ok = mutation_ok && d >= 1e-5;
  }
  const std::string n = std::to_string(kCorpus);
  report(2, compat.ok, n + " random inputs, worst compatibility defect " + sci(compat.worst));
  report(3, conj.ok, n + " random inputs, worst conjugacy defect " + sci(conj.worst));
  report(4, resid.ok && mutation_ok,
         n + " random inputs, worst coefficient residual " + sci(resid.worst) +
             ", weakest mutation signal " + sci(weakest_mutation));
}

void convergence() {
  bool ok = true;
  int used = 0;
  double worst_ratio = 0.0, worst_r2 = 1.0;
  for (int i = 0; i < 40; ++i) {
    const auto r = run(cli::random_config(1000 + static_cast<std::uint64_t>(i), 40, 2));
    const auto g = estimate_growth(r.series);
    worst_r2 = std::min(worst_r2, g.r_squared);
    ok = ok && g.r_squared >= 0.9;
    const auto window = default_window(r.series, r.spec);
    if (!(g.radius >= 2 * window.rmax)) continue;
    ++used;
    const double r10 = pointwise_residual(r.series, r.spec, window, 10).max_residual;
    const double r20 = pointwise_residual(r.series, r.spec, window, 20).max_residual;
    worst_ratio = std::max(worst_ratio, r20 / r10);
    ok = ok && r20 <= r10 / 10;
  }
  report(5, ok && used > 0,
         std::to_string(used) + " inputs, worst residual(N=20)/residual(N=10) " + sci(worst_ratio) +
             ", worst growth-fit R^2 " + sci(worst_r2));
}

void free_family() {
  auto a_cfg = cli::random_config(555, 30, 4);
  auto b_cfg = a_cfg;
  b_cfg.s3 = {-0.4, 0.9, 0.1};
  a_cfg.s3 = {0.6, -0.2};
  const auto a = run(a_cfg), b = run(b_cfg);
  bool ok = true;
  for (const auto* r : {&a, &b}) {
    const auto exp = expand_potential(r->spec);
    ok = ok && compatibility_defects(r->series).max() <= 1e-9 &&
         conjugacy_defect(r->series) <= 1e-9 &&
         max_of(coefficient_residual(r->series, exp)) <= 1e-10;
  }
  const Jet want = (complex(0.0, 1.0) * a.free.u0()) * (a.free.s3 - b.free.s3);
  const double diff = max_abs_diff(a.series.u[3] - b.series.u[3], want);
  report(6, ok && diff <= 1e-12, "u3 shift vs i ds3 u0: " + sci(diff));
}

void b_oracle() {
  testing::Gen gen(77);
  bool ok = true;
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    for (int j = 1; j <= 12; ++j) {
      std::vector<Jet> u, v;
      for (int k = 0; k < j; ++k) {
        u.push_back(gen.jet(0.0, 4));
        v.push_back(gen.jet(0.0, 4));
      }
      const auto ref = oracle::brute_force_B(j, u, v);
      const double d = testing::rel_diff(convolution_B(j, u, v), ref.value);
      worst = std::max(worst, d);
      ok = ok && d <= 1e-13 && ref.count == static_cast<std::size_t>((j - 1) * (j + 4) / 2) &&
           ref.count == triple_count(j);
    }
  }
  report(7, ok, "j <= 12, worst relative difference " + sci(worst));
}

void jet_algebra() {
  testing::Gen gen(8);
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const double base = gen.uniform();
    const int order = gen.integer(1, 12);
    const Jet f = gen.jet(base, order), g = gen.jet(base, order), h = gen.jet(base, order);
    const auto rel = testing::rel_diff;
    worst = std::max({worst,
                      rel(f + g, g + f),
                      rel(f * g, g * f),
                      rel((f + g) + h, f + (g + h)),
                      rel((f * g) * h, f * (g * h)),
                      rel(f * (g + h), f * g + f * h),
                      rel(differentiate(f * g), differentiate(f) * g + f * differentiate(g)),
                      rel(bar(f * g), bar(f) * bar(g)),
                      rel(bar(f + g), bar(f) + bar(g)),
                      rel(bar(differentiate(f)), differentiate(bar(f)))});
  }
  report(8, worst <= 1e-13, "1000 random jets, worst relative defect " + sci(worst));
}

}  // namespace

int main() {
  exact_solution();
  corpus();
  convergence();
  free_family();
  b_oracle();
  jet_algebra();
  std::printf("%s\n", failures == 0 ? "all criteria passed" : "some criteria FAILED");
  return failures == 0 ? 0 : 1;
}
