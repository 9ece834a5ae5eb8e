#include "wtc/io.hpp"

#include <charconv>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <vector>

#include "wtc/errors.hpp"

namespace wtc {

namespace {

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

int parse_int(std::string_view text, std::size_t line) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ParseError("bad integer '" + std::string(text) + "'", line);
  }
  return value;
}

double parse_double_at(std::string_view text, std::size_t line) {
  try {
    return parse_double(text);
  } catch (const ParseError& e) {
    throw ParseError(e.what(), line);
  }
}

std::string strip_cr(std::string s) {
  if (!s.empty() && s.back() == '\r') s.pop_back();
  return s;
}

void write_jet_rows(std::ostream& os, std::string_view name, const Jet& f) {
  for (int m = 0; m <= f.order(); ++m) {
    os << name << ',' << m << ',' << format_double(f[m].real()) << ','
       << format_double(f[m].imag()) << '\n';
  }
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  return std::string(buf, ptr);
}

double parse_double(std::string_view text) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ParseError("bad number '" + std::string(text) + "'");
  }
  return value;
}

void write_coefficients_csv(std::ostream& os, const WTCSeries& series) {
  os << kCoefficientHeader << '\n';
  for (int j = 0; j <= series.N; ++j) {
    const Jet& u = series.u[j];
    const Jet& v = series.v[j];
    const int order = series.valid_order[j];
    for (int m = 0; m <= order; ++m) {
      os << j << ',' << m << ',' << format_double(u[m].real()) << ','
         << format_double(u[m].imag()) << ',' << format_double(v[m].real()) << ','
         << format_double(v[m].imag()) << ',' << order << '\n';
    }
  }
}

WTCSeries read_coefficients_csv(std::istream& is, double base, int k_target) {
  std::string line;
  std::size_t lineno = 1;
  if (!std::getline(is, line) || strip_cr(line) != kCoefficientHeader) {
    throw ParseError("expected header '" + std::string(kCoefficientHeader) + "'", 1);
  }
  std::vector<std::vector<complex>> u, v;
  std::vector<int> orders;
  while (std::getline(is, line)) {
    ++lineno;
    line = strip_cr(line);
    if (line.empty()) continue;
    const auto f = split(line);
    if (f.size() != 7) throw ParseError("expected 7 fields", lineno);
    const int j = parse_int(f[0], lineno);
    const int m = parse_int(f[1], lineno);
    const int order = parse_int(f[6], lineno);
    if (j == static_cast<int>(u.size())) {
      if (m != 0) throw ParseError("coefficient table must start each j at m = 0", lineno);
      u.emplace_back();
      v.emplace_back();
      orders.push_back(order);
    }
    if (j != static_cast<int>(u.size()) - 1 || m != static_cast<int>(u.back().size()) ||
        order != orders.back()) {
      throw ParseError("rows out of order", lineno);
    }
    u.back().emplace_back(parse_double_at(f[2], lineno), parse_double_at(f[3], lineno));
    v.back().emplace_back(parse_double_at(f[4], lineno), parse_double_at(f[5], lineno));
  }
  if (u.empty()) throw ParseError("empty coefficient table", lineno);

  WTCSeries s;
  s.N = static_cast<int>(u.size()) - 1;
  s.k_target = k_target;
  for (std::size_t j = 0; j < u.size(); ++j) {
    if (static_cast<int>(u[j].size()) != orders[j] + 1) {
      throw ParseError("coefficient " + std::to_string(j) + " is missing rows");
    }
    s.u.emplace_back(base, std::move(u[j]));
    s.v.emplace_back(base, std::move(v[j]));
    s.valid_order.push_back(orders[j]);
  }
  return s;
}

void write_resonances_csv(std::ostream& os, const ResonanceDiagnostics& diag) {
  os << kResonanceHeader << '\n';
  write_jet_rows(os, "r1", diag.r1);
  write_jet_rows(os, "r2", diag.r2);
  write_jet_rows(os, "R1", diag.R1);
  write_jet_rows(os, "R2", diag.R2);
}

ResonanceDiagnostics read_resonances_csv(std::istream& is, double base) {
  std::string line;
  std::size_t lineno = 1;
  if (!std::getline(is, line) || strip_cr(line) != kResonanceHeader) {
    throw ParseError("expected header '" + std::string(kResonanceHeader) + "'", 1);
  }
  std::map<std::string, std::vector<complex>, std::less<>> jets;
  while (std::getline(is, line)) {
    ++lineno;
    line = strip_cr(line);
    if (line.empty()) continue;
    const auto f = split(line);
    if (f.size() != 4) throw ParseError("expected 4 fields", lineno);
    auto& c = jets[std::string(f[0])];
    if (parse_int(f[1], lineno) != static_cast<int>(c.size())) {
      throw ParseError("rows out of order", lineno);
    }
    c.emplace_back(parse_double_at(f[2], lineno), parse_double_at(f[3], lineno));
  }
  const auto take = [&](const char* name) {
    auto it = jets.find(name);
    if (it == jets.end()) throw ParseError(std::string("missing resonance jet ") + name);
    return Jet(base, std::move(it->second));
  };
  return {take("r1"), take("r2"), take("R1"), take("R2")};
}

}  // namespace wtc
