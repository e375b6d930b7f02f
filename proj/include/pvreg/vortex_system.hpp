#pragma once

#include <string>
#include <vector>

#include "pvreg/domain.hpp"

namespace pvreg {

struct Vortex {
  double strength = 1.0;  // kappa > 0
  Vec2 pos;
  double subdomain_radius = 0.0;  // 0 selects the default
};

/// Positive vortices first, then negative ones. Index i < m is a positive
/// vortex, i >= m a negative one.
struct VortexSystem {
  std::vector<Vortex> plus;
  std::vector<Vortex> minus;
  double rho = 0.0;   // boundary separation; 0 selects 0.05 * diameter
  double lbar = 2.0;  // pairwise separation is rho^lbar

  int size() const { return static_cast<int>(plus.size() + minus.size()); }
  int m() const { return static_cast<int>(plus.size()); }
  int n() const { return static_cast<int>(minus.size()); }
  const Vortex& at(int i) const;
  Vortex& at(int i);
  /// +1 for positive vortices, -1 for negative ones.
  int sign(int i) const { return i < m() ? 1 : -1; }
  double kappa(int i) const { return at(i).strength; }
  /// sign * kappa
  double signed_strength(int i) const { return sign(i) * kappa(i); }
  Vec2 position(int i) const { return at(i).pos; }
  std::vector<Vec2> positions() const;
  void set_positions(const std::vector<Vec2>& z);
  double sum_kappa_sq() const;
  /// Label such as "+1" or "-2" (1-based within its sign group).
  std::string label(int i) const;

  double separation(const Domain& d) const { return rho > 0.0 ? rho : 0.05 * d.diameter(); }
  double pair_separation(const Domain& d) const;
};

/// Validates strengths (all > 0) and that the system is nonempty.
void validate_strengths(const VortexSystem& vs);

/// Checks the separation conditions: distance to the boundary at least rho and
/// pairwise distance at least rho^lbar. Returns an empty string when
/// admissible, otherwise a description of the first violation.
std::string admissibility_violation(const VortexSystem& vs, const Domain& d);

/// Subdomain radii: configured values or min(rho, half the smallest pairwise
/// distance). Throws ConfigError naming the pair when disks overlap or a disk
/// leaves the domain.
std::vector<double> subdomain_radii(const VortexSystem& vs, const Domain& d);

}  // namespace pvreg
