#include <cmath>

#include "doctest.h"
#include "support/generators.hpp"
#include "wtc/errors.hpp"
#include "wtc/jet.hpp"

using namespace wtc;
using wtc::testing::Gen;
using wtc::testing::rel_diff;

namespace {

Jet poly(std::initializer_list<complex> c, double base = 0.0) { return Jet(base, c); }

constexpr complex I{0.0, 1.0};

}  // namespace

TEST_CASE("add is coefficientwise and truncates to the smaller order") {
  CHECK(poly({1, 2}) + poly({3, -1}) == poly({4, 1}));
  const Jet f = poly({1, 2, 3});
  CHECK(f + Jet::zero(0.0, 1) == poly({1, 2}));
  CHECK((poly({0, 0, 1}) + poly({0, 0, -1})).max_abs() == 0.0);
  CHECK(add(f, f) == poly({2, 4, 6}));
}

TEST_CASE("mul is the truncated Cauchy product") {
  CHECK(poly({1, 1, 0}) * poly({1, -1, 0}) == poly({1, 0, -1}));
  const Jet f = poly({1.5, -2, I});
  CHECK(f * Jet::constant(0.0, 2, 1.0) == f);
  CHECK(mul(poly({1, 1}), poly({1, 1})) == poly({1, 2}));
}

TEST_CASE("binary operations reject different base points") {
  CHECK_THROWS_AS(poly({1}, 0.0) + poly({1}, 1.0), StructuralError);
  CHECK_THROWS_AS(poly({1}, 0.0) * poly({1}, 0.5), StructuralError);
}

TEST_CASE("differentiate") {
  CHECK(differentiate(poly({1, 3, 1})) == poly({3, 2}));
  const Jet d = differentiate(Jet::constant(0.0, 1, 7.0));
  CHECK(d.order() == 0);
  CHECK(d[0] == 0.0);
  CHECK_THROWS_AS(differentiate(poly({5})), InsufficientOrder);
}

TEST_CASE("bar conjugates entrywise") {
  CHECK(bar(poly({I, 1.0 - I})) == poly({-I, 1.0 + I}));
  const Jet f = poly({I, 2.0 + I, -3.0});
  CHECK(bar(bar(f)) == f);
  const Jet r = poly({1, -2, 0.5});
  CHECK(bar(r) == r);
}

TEST_CASE("evaluate uses Horner about the base point") {
  CHECK(evaluate(poly({1, 2}), 0.5) == complex(2.0));
  const Jet f = poly({I, 3, -1}, 0.75);
  CHECK(evaluate(f, 0.75) == I);
  CHECK(std::abs(evaluate(poly({0, 0, 1}), I) - complex(-1.0)) < 1e-15);
}

TEST_CASE("constructors") {
  const double c[] = {1.0, -2.0, 3.0, 4.0};
  const Jet p = Jet::polynomial(0.5, 2, c);
  CHECK(p.order() == 2);
  CHECK(p == Jet(0.5, {1.0, -2.0, 3.0}));
  const Jet padded = Jet::polynomial(0.0, 5, std::span(c, 2));
  CHECK(padded.order() == 5);
  CHECK(padded[4] == 0.0);
  CHECK(Jet::identity(2.0, 3) == Jet(2.0, {2.0, 1.0, 0.0, 0.0}));
  CHECK_THROWS_AS(Jet(0.0, {}), PreconditionError);
  CHECK_THROWS_AS(p.truncated(3), InsufficientOrder);
  CHECK(real_part(poly({I, 2.0 + I})) == poly({0.0, 2.0}));
  CHECK(imag_part(poly({I, 2.0 + I})) == poly({1.0, 1.0}));
}

TEST_CASE("property: ring laws, Leibniz rule and bar homomorphism") {
  Gen gen(20240611);
  for (int trial = 0; trial < 200; ++trial) {
    const int order = gen.integer(1, 12);
    const double base = gen.uniform(-2.0, 2.0);
    const Jet f = gen.jet(base, order);
    const Jet g = gen.jet(base, order);
    const Jet h = gen.jet(base, order);
    CAPTURE(trial);

    CHECK(rel_diff(f * g, g * f) <= 1e-13);
    CHECK(rel_diff((f * g) * h, f * (g * h)) <= 1e-13);
    CHECK(rel_diff(f * (g + h), f * g + f * h) <= 1e-13);

    const Jet lhs = differentiate(f * g);
    const Jet rhs = differentiate(f) * g.truncated(order - 1) + f.truncated(order - 1) * differentiate(g);
    CHECK(rel_diff(lhs, rhs) <= 1e-13);

    CHECK(rel_diff(bar(f * g), bar(f) * bar(g)) <= 1e-13);
    CHECK(bar(f + g) == bar(f) + bar(g));
    CHECK(bar(bar(f)) == f);
    CHECK(bar(differentiate(f)) == differentiate(bar(f)));

    const complex at_base = evaluate(f * g, base);
    CHECK(std::abs(at_base - evaluate(f, base) * evaluate(g, base)) <= 1e-13 * std::max(1.0, std::abs(at_base)));
  }
}
