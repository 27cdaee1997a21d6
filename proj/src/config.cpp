#include "fcit/config.hpp"

#include <cmath>

namespace fcit {

void Bounds::validate() const {
  if (lower.size() != upper.size() || lower.empty()) {
    throw ContractViolation("bounds: lower/upper dimension mismatch");
  }
  for (std::size_t i = 0; i < lower.size(); ++i) {
    if (!std::isfinite(lower[i]) || !std::isfinite(upper[i]) || !(lower[i] < upper[i])) {
      throw ContractViolation("bounds: lower[i] < upper[i] required");
    }
  }
}

double Bounds::diameter() const {
  double d2 = 0.0;
  for (std::size_t i = 0; i < lower.size(); ++i) {
    const double e = upper[i] - lower[i];
    d2 += e * e;
  }
  return std::sqrt(d2);
}

bool Bounds::contains(std::span<const double> q) const {
  if (q.size() != lower.size()) return false;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i] < lower[i] || q[i] > upper[i]) return false;
  }
  return true;
}

double distance(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw ContractViolation("distance: dimension mismatch");
  }
  double d2 = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double e = b[i] - a[i];
    d2 += e * e;
  }
  return std::sqrt(d2);
}

Config interpolate(const Config& a, const Config& b, double t) {
  if (a.dim() != b.dim()) {
    throw ContractViolation("interpolate: dimension mismatch");
  }
  if (!(t >= 0.0 && t <= 1.0)) {
    throw ContractViolation("interpolate: t outside [0,1]");
  }
  Config out;
  out.coords.resize(a.coords.size());
  for (std::size_t i = 0; i < a.coords.size(); ++i) {
    out.coords[i] = a.coords[i] + t * (b.coords[i] - a.coords[i]);
  }
  return out;
}

}  // namespace fcit
