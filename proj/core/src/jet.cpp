#include "wtc/jet.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wtc/errors.hpp"

namespace wtc {

namespace {

void require_same_base(const Jet& f, const Jet& g) {
  if (f.base() != g.base()) {
    throw StructuralError("jet base points differ: " + std::to_string(f.base()) + " vs " +
                          std::to_string(g.base()));
  }
}

}  // namespace

Jet::Jet() : coeffs_(1, complex{}) {}

Jet::Jet(double base, std::vector<complex> coeffs) : base_(base), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw PreconditionError("jet needs at least one coefficient");
}

Jet Jet::zero(double base, int order) { return constant(base, order, complex{}); }

Jet Jet::constant(double base, int order, complex value) {
  if (order < 0) throw PreconditionError("negative jet order");
  std::vector<complex> c(static_cast<std::size_t>(order) + 1);
  c[0] = value;
  return Jet(base, std::move(c));
}

Jet Jet::identity(double base, int order) {
  Jet f = constant(base, order, base);
  if (order >= 1) f[1] = 1.0;
  return f;
}

Jet Jet::polynomial(double base, int order, std::span<const double> ascending) {
  Jet f = zero(base, order);
  const auto n = std::min<std::size_t>(ascending.size(), f.coeffs_.size());
  for (std::size_t m = 0; m < n; ++m) f.coeffs_[m] = ascending[m];
  return f;
}

Jet Jet::truncated(int order) const {
  if (order < 0) throw PreconditionError("negative jet order");
  if (order > this->order()) {
    throw InsufficientOrder("cannot extend jet of order " + std::to_string(this->order()) +
                            " to order " + std::to_string(order));
  }
  return Jet(base_, std::vector<complex>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

double Jet::max_abs() const noexcept {
  double m = 0.0;
  for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

double Jet::max_imag() const noexcept {
  double m = 0.0;
  for (const auto& c : coeffs_) m = std::max(m, std::abs(c.imag()));
  return m;
}

double Jet::max_real() const noexcept {
  double m = 0.0;
  for (const auto& c : coeffs_) m = std::max(m, std::abs(c.real()));
  return m;
}

Jet& Jet::operator+=(const Jet& rhs) {
  require_same_base(*this, rhs);
  coeffs_.resize(static_cast<std::size_t>(std::min(order(), rhs.order())) + 1);
  for (std::size_t m = 0; m < coeffs_.size(); ++m) coeffs_[m] += rhs.coeffs_[m];
  return *this;
}

Jet& Jet::operator-=(const Jet& rhs) {
  require_same_base(*this, rhs);
  coeffs_.resize(static_cast<std::size_t>(std::min(order(), rhs.order())) + 1);
  for (std::size_t m = 0; m < coeffs_.size(); ++m) coeffs_[m] -= rhs.coeffs_[m];
  return *this;
}

Jet& Jet::operator*=(const Jet& rhs) { return *this = *this * rhs; }

Jet& Jet::operator*=(complex s) noexcept {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

Jet operator*(const Jet& lhs, const Jet& rhs) {
  require_same_base(lhs, rhs);
  const int order = std::min(lhs.order(), rhs.order());
  std::vector<complex> out(static_cast<std::size_t>(order) + 1);
  const auto& f = lhs.coeffs_;
  const auto& g = rhs.coeffs_;
  for (int m = 0; m <= order; ++m) {
    complex acc{};
    for (int i = 0; i <= m; ++i) acc += f[i] * g[m - i];
    out[m] = acc;
  }
  return Jet(lhs.base_, std::move(out));
}

Jet add(const Jet& f, const Jet& g) { return f + g; }

Jet mul(const Jet& f, const Jet& g) { return f * g; }

Jet differentiate(const Jet& f) {
  if (f.order() < 1) throw InsufficientOrder("cannot differentiate a jet of order 0");
  std::vector<complex> out(static_cast<std::size_t>(f.order()));
  for (int m = 0; m < f.order(); ++m) out[m] = static_cast<double>(m + 1) * f[m + 1];
  return Jet(f.base(), std::move(out));
}

Jet bar(const Jet& f) {
  std::vector<complex> out(f.coeffs().begin(), f.coeffs().end());
  for (auto& c : out) c = std::conj(c);
  return Jet(f.base(), std::move(out));
}

Jet real_part(const Jet& f) {
  std::vector<complex> out(f.coeffs().begin(), f.coeffs().end());
  for (auto& c : out) c = c.real();
  return Jet(f.base(), std::move(out));
}

Jet imag_part(const Jet& f) {
  std::vector<complex> out(f.coeffs().begin(), f.coeffs().end());
  for (auto& c : out) c = c.imag();
  return Jet(f.base(), std::move(out));
}

complex evaluate(const Jet& f, complex t) noexcept {
  const auto c = f.coeffs();
  const complex h = t - f.base();
  complex acc = c.back();
  for (auto m = c.size() - 1; m-- > 0;) acc = acc * h + c[m];
  return acc;
}

double max_abs_diff(const Jet& f, const Jet& g) { return (f - g).max_abs(); }

}  // namespace wtc
