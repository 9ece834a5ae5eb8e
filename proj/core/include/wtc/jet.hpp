#pragma once

#include <complex>
#include <span>
#include <vector>

namespace wtc {

using complex = std::complex<double>;

/// Truncated Taylor series of a function of t about a real base point t0.
///
/// coeffs()[m] holds f^(m)(t0)/m!, for m = 0..order(). Binary operations
/// truncate to the smaller operand order and never pad, so order() is always
/// the number of coefficients that are actually known.
class Jet {
 public:
  /// Zero jet of order 0 about t0 = 0.
  Jet();
  Jet(double base, std::vector<complex> coeffs);

  static Jet zero(double base, int order);
  static Jet constant(double base, int order, complex value);
  /// The identity function t, i.e. t0 + (t - t0).
  static Jet identity(double base, int order);
  /// Real polynomial given in ascending powers of (t - t0). Higher powers than
  /// `order` are dropped, missing ones are zero.
  static Jet polynomial(double base, int order, std::span<const double> ascending);

  double base() const noexcept { return base_; }
  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const complex> coeffs() const noexcept { return coeffs_; }
  complex operator[](int m) const { return coeffs_.at(static_cast<std::size_t>(m)); }
  complex& operator[](int m) { return coeffs_.at(static_cast<std::size_t>(m)); }

  Jet truncated(int order) const;

  /// Largest coefficient modulus.
  double max_abs() const noexcept;
  /// Largest |Im c_m|.
  double max_imag() const noexcept;
  /// Largest |Re c_m|.
  double max_real() const noexcept;
  bool is_real(double tol = 0.0) const noexcept { return max_imag() <= tol; }

  Jet& operator+=(const Jet& rhs);
  Jet& operator-=(const Jet& rhs);
  Jet& operator*=(const Jet& rhs);
  Jet& operator*=(complex s) noexcept;

  friend Jet operator+(Jet lhs, const Jet& rhs) { return lhs += rhs; }
  friend Jet operator-(Jet lhs, const Jet& rhs) { return lhs -= rhs; }
  friend Jet operator*(const Jet& lhs, const Jet& rhs);
  friend Jet operator*(Jet f, complex s) noexcept { return f *= s; }
  friend Jet operator*(complex s, Jet f) noexcept { return f *= s; }
  friend Jet operator*(Jet f, double s) noexcept { return f *= complex(s); }
  friend Jet operator*(double s, Jet f) noexcept { return f *= complex(s); }
  friend Jet operator-(Jet f) noexcept { return f *= complex(-1.0); }

  friend bool operator==(const Jet&, const Jet&) = default;

 private:
  double base_ = 0.0;
  std::vector<complex> coeffs_;
};

Jet add(const Jet& f, const Jet& g);
Jet mul(const Jet& f, const Jet& g);

/// d/dt; the result has order one less than `f`. Throws InsufficientOrder on
/// an order-0 input.
Jet differentiate(const Jet& f);

/// Entrywise conjugation: the holomorphic extension of t -> conj(f(t)),
/// which is well defined because the base point is real.
Jet bar(const Jet& f);

/// Real and imaginary parts taken coefficientwise, returned as real-valued
/// jets. For a real base point these are the jets of Re f(t) and Im f(t).
Jet real_part(const Jet& f);
Jet imag_part(const Jet& f);

/// Horner evaluation of sum c_m (t - t0)^m.
complex evaluate(const Jet& f, complex t) noexcept;

/// Largest coefficient modulus of f - g over the common order.
double max_abs_diff(const Jet& f, const Jet& g);

}  // namespace wtc
