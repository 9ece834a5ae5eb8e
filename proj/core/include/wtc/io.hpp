#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "wtc/recursion.hpp"

namespace wtc {

/// Round-trip exact decimal with 17 significant digits; locale independent.
std::string format_double(double x);
double parse_double(std::string_view text);

inline constexpr std::string_view kCoefficientHeader = "j,m,re_u,im_u,re_v,im_v,valid_order";
inline constexpr std::string_view kResonanceHeader = "name,m,re,im";

/// One row per (j, m) with m = 0..valid_order[j].
void write_coefficients_csv(std::ostream& os, const WTCSeries& series);

/// Inverse of write_coefficients_csv. Diagnostics are left empty.
WTCSeries read_coefficients_csv(std::istream& is, double base, int k_target);

/// Rows for r1, r2, R1, R2.
void write_resonances_csv(std::ostream& os, const ResonanceDiagnostics& diag);
ResonanceDiagnostics read_resonances_csv(std::istream& is, double base);

}  // namespace wtc
