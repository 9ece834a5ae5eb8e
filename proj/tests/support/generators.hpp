#pragma once

// Hand-rolled generators for property tests.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "wtc/jet.hpp"

namespace wtc::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo = -1.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  complex cplx() { return {uniform(), uniform()}; }

  Jet jet(double base, int order) {
    std::vector<complex> c(static_cast<std::size_t>(order) + 1);
    for (auto& x : c) x = cplx();
    return Jet(base, std::move(c));
  }

  std::vector<double> real_poly(int max_degree = 4) {
    std::vector<double> p(static_cast<std::size_t>(integer(0, max_degree)) + 1);
    for (auto& x : p) x = uniform();
    return p;
  }

 private:
  std::mt19937_64 rng_;
};

/// max |f - g| / max(1, |f|, |g|) over the common order.
inline double rel_diff(const Jet& f, const Jet& g) {
  return max_abs_diff(f, g) / std::max({1.0, f.max_abs(), g.max_abs()});
}

}  // namespace wtc::testing
