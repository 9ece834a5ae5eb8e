#include <array>
#include <vector>

#include "doctest.h"
#include "support/generators.hpp"
#include "wtc/errors.hpp"
#include "wtc/potential.hpp"

using namespace wtc;
using wtc::testing::Gen;

namespace {

constexpr complex I{0.0, 1.0};

PotentialSpec make(int order, std::vector<double> p0, std::vector<double> p1, std::vector<double> q,
                   std::vector<double> psi, double base = 0.0) {
  return PotentialSpec::from_polynomials(base, order, p0, p1, q, psi);
}

void check_jet(const Jet& got, std::initializer_list<complex> want, double tol = 1e-14) {
  REQUIRE(got.order() >= static_cast<int>(want.size()) - 1);
  int m = 0;
  for (const complex& w : want) {
    CAPTURE(m);
    CHECK(std::abs(got[m] - w) <= tol);
    ++m;
  }
}

}  // namespace

TEST_CASE("zero potential expands to zero") {
  const auto e = expand_potential(make(4, {}, {}, {}, {}));
  CHECK(e.a0.max_abs() == 0.0);
  CHECK(e.a1.max_abs() == 0.0);
  CHECK(e.a2.max_abs() == 0.0);
  CHECK(e.phi.max_abs() == 0.0);
  CHECK(potential_identity_defect(e).max_abs() == 0.0);
}

// Expected values below come from tests/oracle/potential_cas.py.
TEST_CASE("a(x, t) = x expanded about x = -2") {
  const auto e = expand_potential(make(3, {0}, {1}, {0}, {2}));
  check_jet(e.a2, {0, 0, 0});
  check_jet(e.a1, {1, 0, 0});
  check_jet(e.a0, {-2, 0, 0});
}

TEST_CASE("q(t) = t gives a2 = 1/2 - t^2 and a0 = i t") {
  const auto e = expand_potential(make(3, {}, {}, {0, 1}, {}));
  check_jet(e.a2, {0.5, 0, -1});
  check_jet(e.a1, {0, 0, 0});
  check_jet(e.a0, {0, I, 0});
  CHECK(potential_identity_defect(e).max_abs() == 0.0);
}

TEST_CASE("mixed polynomial data matches symbolic expansion") {
  const auto e = expand_potential(make(4, {1, -1, 1}, {0, 2}, {0.5, 1}, {0, 1, 0, -1}));
  check_jet(e.a0, {{1.0, 0.5}, {-1.0, 1.0}, -0.75, -1.0});
  check_jet(e.a1, {0, 1.5, 2.0, 2.5});
  check_jet(e.a2, {0.25, -1, -1, 0});
  check_jet(e.phi, {0.5 * I, 0, -1.5 * I});
  CHECK(e.a0.order() == 3);
}

TEST_CASE("expansion invariants on random admissible potentials") {
  Gen gen(7);
  for (int trial = 0; trial < 100; ++trial) {
    CAPTURE(trial);
    const double base = gen.uniform(-1.0, 1.0);
    const auto spec = make(8, gen.real_poly(), gen.real_poly(), gen.real_poly(), gen.real_poly(), base);
    const auto e = expand_potential(spec);
    CHECK(potential_identity_defect(e).max_abs() <= 1e-12);
    CHECK(e.abar1 == e.a1);
    CHECK(e.abar2 == e.a2);
    CHECK(e.a1.is_real());
    CHECK(e.a2.is_real());
    CHECK((e.a0 - e.abar0 - 2.0 * I * spec.q).max_abs() <= 1e-15);
    CHECK((bar(e.phi) + e.phi).max_abs() == 0.0);
    CHECK(bar(e.a0) == e.abar0);
  }
}

TEST_CASE("identity defect detects a potential outside the admissible family") {
  // Replace a2 by something other than q'/2 - q^2.
  auto e = expand_potential(make(4, {}, {}, {0, 1}, {}));
  e.a2 = e.a2 + Jet::constant(0.0, e.a2.order(), 0.1);
  e.abar2 = bar(e.a2);
  CHECK(potential_identity_defect(e).max_abs() >= 0.1);
}

TEST_CASE("potential inputs must be real and consistent") {
  auto spec = make(3, {1}, {}, {}, {});
  spec.q = Jet(0.0, {0.0, I, 0.0, 0.0});
  CHECK_THROWS_AS(expand_potential(spec), PreconditionError);

  auto other_base = make(3, {1}, {}, {}, {});
  other_base.p1 = Jet::zero(1.0, 3);
  CHECK_THROWS_AS(expand_potential(other_base), StructuralError);

  CHECK_THROWS_AS(expand_potential(make(0, {}, {}, {}, {})), InsufficientOrder);
}

TEST_CASE("pointwise evaluator agrees with the closed form") {
  const auto spec = make(6, {1, -1, 1}, {0, 2}, {0.5, 1}, {0, 1, 0, -1});
  const PotentialEvaluator a(spec);
  for (double x : {-1.0, 0.0, 0.3}) {
    for (double t : {-0.2, 0.0, 0.1}) {
      const double q = 0.5 + t;
      const complex want = x * x * (0.5 - q * q) + x * 2.0 * t + (1 - t + t * t) + I * q;
      CHECK(std::abs(a(x, t) - want) <= 1e-14);
    }
  }
}
