#include "lgf/green_table.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <string>

#include "lgf/errors.hpp"

namespace lgf {

namespace {

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

GreenTable make_green_table(const SpectralBackend& backend, const SpherePoint& lambda, const Window& window,
                            LatticeIndex target, GreenKind kind, int nodes) {
  if (window.empty()) throw PreconditionError("green table window is empty");
  GreenTable table{lambda, target, kind, {}, nodes, 0.0};
  table.values = GreenFunction(backend, lambda, nodes).table(window, target, kind);
  const LatticeField fine = GreenFunction(backend, lambda, 2 * nodes).table(window, target, kind);
  for (int mu = window.lo0; mu <= window.hi0; ++mu)
    for (int nu = window.lo1; nu <= window.hi1; ++nu)
      table.error_estimate = std::max(table.error_estimate, std::abs(table.values.at(mu, nu) - fine.at(mu, nu)));
  return table;
}

void write_csv(std::ostream& out, const GreenTable& table) {
  const Window& w = table.values.window();
  out << "mu,nu,mu_t,nu_t,re,im\n";
  for (int mu = w.lo0; mu <= w.hi0; ++mu) {
    for (int nu = w.lo1; nu <= w.hi1; ++nu) {
      const Complex v = table.values.at(mu, nu);
      out << mu << ',' << nu << ',' << table.target.mu << ',' << table.target.nu << ',' << num(v.real()) << ','
          << num(v.imag()) << '\n';
    }
  }
}

void write_json(std::ostream& out, const GreenTable& table) {
  const Window& w = table.values.window();
  out << "{\n  \"lambda\": ";
  if (table.lambda.is_infinity()) {
    out << "\"inf\"";
  } else {
    out << '[' << num(table.lambda.value().real()) << ", " << num(table.lambda.value().imag()) << ']';
  }
  out << ",\n  \"kind\": \"" << to_string(table.kind) << "\",\n";
  out << "  \"target\": [" << table.target.mu << ", " << table.target.nu << "],\n";
  out << "  \"window\": [" << w.lo0 << ", " << w.hi0 << ", " << w.lo1 << ", " << w.hi1 << "],\n";
  out << "  \"nodes\": " << table.nodes << ",\n";
  out << "  \"error_estimate\": " << num(table.error_estimate) << ",\n";
  out << "  \"rows\": [";
  bool first = true;
  for (int mu = w.lo0; mu <= w.hi0; ++mu) {
    for (int nu = w.lo1; nu <= w.hi1; ++nu) {
      const Complex v = table.values.at(mu, nu);
      out << (first ? "\n    [" : ",\n    [") << mu << ", " << nu << ", " << num(v.real()) << ", " << num(v.imag())
          << ']';
      first = false;
    }
  }
  out << "\n  ]\n}\n";
}

}  // namespace lgf
