#pragma once

#include <vector>

#include "pvreg/geometry.hpp"

namespace pvreg {

/// Radial ground state of -Lap(phi) = phi^p on the unit disk, phi = 0 on the
/// unit circle. Tabulated on Chebyshev-spaced nodes in [0, 1].
struct RadialProfile {
  double p = 2.0;
  std::vector<double> r;
  std::vector<double> phi;
  std::vector<double> dphi;
  double slope_at_one = 0.0;  // phi'(1) < 0
  double phi_at_zero = 0.0;
  double int_phi_p = 0.0;   // integral over B1 of phi^p
  double int_phi_p1 = 0.0;  // integral over B1 of phi^(p+1)
  double ode_residual = 0.0;
  double shoot_radius = 0.0;  // first zero of the phi(0) = 1 solution

  /// phi(rho) for rho in [0, 1]; 0 outside.
  double value(double rho) const;
  /// phi'(rho) for rho in [0, 1]; 0 outside.
  double derivative(double rho) const;
};

struct ProfileOptions {
  double tol = 1e-13;
  int nodes = 4096;
  double shoot_height = 1.0;
};

/// Shoot from the origin, locate the first zero and rescale by the
/// similarity phi(r) = lambda^{2/(p-1)} phi_1(lambda r).
RadialProfile solve_profile(double p, const ProfileOptions& opts = {});

/// The glued C^1 profile: phi(|x|) inside the unit disk, phi'(1) ln|x| outside.
double limit_profile_eval(const RadialProfile& rp, const Vec2& x);

/// Radial derivative of the glued profile at radius rho >= 0.
double limit_profile_radial_derivative(const RadialProfile& rp, double rho);

}  // namespace pvreg
