#include "wtc/potential.hpp"

#include <algorithm>
#include <string>

#include "wtc/errors.hpp"

namespace wtc {

namespace {

constexpr complex kI{0.0, 1.0};

void require_real(const Jet& f, const char* name) {
  if (!f.is_real()) {
    throw PreconditionError(std::string("potential input '") + name + "' must be real-valued");
  }
}

}  // namespace

int PotentialSpec::order() const noexcept {
  return std::min({p0.order(), p1.order(), q.order(), psi.order()});
}

void PotentialSpec::validate() const {
  require_real(p0, "p0");
  require_real(p1, "p1");
  require_real(q, "q");
  require_real(psi, "psi");
  for (const Jet* f : {&p0, &p1, &q}) {
    if (f->base() != psi.base()) throw StructuralError("potential jets have different base points");
    if (f->order() != psi.order()) throw StructuralError("potential jets have different orders");
  }
}

PotentialSpec PotentialSpec::from_polynomials(double base, int order, std::span<const double> p0,
                                              std::span<const double> p1,
                                              std::span<const double> q,
                                              std::span<const double> psi) {
  return PotentialSpec{Jet::polynomial(base, order, p0), Jet::polynomial(base, order, p1),
                       Jet::polynomial(base, order, q), Jet::polynomial(base, order, psi)};
}

double PotentialExpansion::scale() const noexcept {
  return std::max({a0.max_abs(), a1.max_abs(), a2.max_abs(), phi.max_abs()});
}

PotentialExpansion expand_potential(const PotentialSpec& spec) {
  spec.validate();
  const Jet dq = differentiate(spec.q);
  const Jet& psi = spec.psi;
  // Coefficient of x^2 in a(x, t); real.
  const Jet curvature = 0.5 * dq - spec.q * spec.q;

  PotentialExpansion e;
  e.a2 = curvature;
  e.a1 = spec.p1 - 2.0 * (psi * curvature);
  e.a0 = psi * psi * curvature - psi * spec.p1 + spec.p0 + kI * spec.q;
  e.abar0 = bar(e.a0);
  e.abar1 = bar(e.a1);
  e.abar2 = bar(e.a2);
  e.psi_prime = differentiate(psi);
  e.phi = (0.5 * kI) * e.psi_prime;
  return e;
}

Jet potential_identity_defect(const PotentialExpansion& exp) {
  const Jet im_part = exp.a0 - exp.abar0;
  return (0.5 * kI) * differentiate(im_part) - 0.5 * (im_part * im_part) + exp.a2 + exp.abar2;
}

PotentialEvaluator::PotentialEvaluator(const PotentialSpec& spec)
    : p0_(spec.p0), p1_(spec.p1), q_(spec.q), dq_(differentiate(spec.q)) {}

complex PotentialEvaluator::operator()(double x, double t) const {
  const double q = evaluate(q_, t).real();
  const double dq = evaluate(dq_, t).real();
  const double p1 = evaluate(p1_, t).real();
  const double p0 = evaluate(p0_, t).real();
  return {x * x * (0.5 * dq - q * q) + x * p1 + p0, q};
}

}  // namespace wtc
