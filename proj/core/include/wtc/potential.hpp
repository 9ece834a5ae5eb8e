#pragma once

#include <span>

#include "wtc/jet.hpp"

namespace wtc {

/// Data defining the potential
///   a(x, t) = x^2 (q'/2 - q^2) + x p1 + p0 + i q
/// and the singular curve x + psi(t) = 0. All four jets are real-valued and
/// share base point and order.
struct PotentialSpec {
  Jet p0;
  Jet p1;
  Jet q;
  Jet psi;

  double base() const noexcept { return psi.base(); }
  int order() const noexcept;

  /// Throws PreconditionError if any jet has a nonzero imaginary part or the
  /// jets disagree on base point or order.
  void validate() const;

  static PotentialSpec from_polynomials(double base, int order, std::span<const double> p0,
                                        std::span<const double> p1, std::span<const double> q,
                                        std::span<const double> psi);
};

/// Coefficients of a(x, t) = a0 + a1 Psi + a2 Psi^2 with Psi = x + psi(t),
/// their conjugates, phi = i psi'/2 and psi' itself.
struct PotentialExpansion {
  Jet a0, a1, a2;
  Jet abar0, abar1, abar2;
  Jet phi;
  Jet psi_prime;

  /// Largest coefficient modulus over a_k and phi; used to scale tolerances.
  double scale() const noexcept;
};

PotentialExpansion expand_potential(const PotentialSpec& spec);

/// (i/2)(a0 - abar0)' - (a0 - abar0)^2 / 2 + a2 + abar2.
/// Vanishes identically for every potential of the admissible form; it is the
/// obstruction to the second resonance being compatible.
Jet potential_identity_defect(const PotentialExpansion& exp);

/// Pointwise a(x, t) at real (x, t), evaluated straight from the defining jets
/// rather than from expand_potential.
class PotentialEvaluator {
 public:
  explicit PotentialEvaluator(const PotentialSpec& spec);
  complex operator()(double x, double t) const;

 private:
  Jet p0_, p1_, q_, dq_;
};

}  // namespace wtc
