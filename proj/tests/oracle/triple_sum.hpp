#pragma once

// Brute-force reference for the cubic interaction sum: enumerate every index
// triple in [0, j]^3 and keep those summing to j with all indices below j.

#include <cstddef>
#include <span>

#include "wtc/jet.hpp"

namespace wtc::oracle {

struct TripleSum {
  Jet value;
  std::size_t count = 0;
};

inline TripleSum brute_force_B(int j, std::span<const Jet> u, std::span<const Jet> v) {
  TripleSum out{Jet::zero(u[0].base(), std::min(u[0].order(), v[0].order())), 0};
  for (int a = 0; a <= j; ++a) {
    for (int b = 0; b <= j; ++b) {
      for (int c = 0; c <= j; ++c) {
        if (a + b + c != j || a >= j || b >= j || c >= j) continue;
        out.value += 2.0 * (u[a] * u[b] * v[c]);
        ++out.count;
      }
    }
  }
  return out;
}

}  // namespace wtc::oracle
