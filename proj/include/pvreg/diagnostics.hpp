#pragma once

#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "pvreg/ansatz.hpp"
#include "pvreg/elliptic.hpp"

namespace pvreg {

struct VortexReport {
  std::string label;
  Vec2 center;              // vorticity centroid
  double circulation = 0.0;  // signed
  double inner_radius = 0.0;  // nearest free-boundary crossing from z
  double outer_radius = 0.0;  // farthest free-boundary crossing from z
  int support_nodes = 0;
  bool touches_subdomain = false;
};

struct VortexDiagnostics {
  double eps = 0.0;
  double delta = 0.0;
  double p = 2.0;
  std::vector<VortexReport> vortices;
  double total_circulation = 0.0;
  double energy = 0.0;  // in the w variable
  double residual_l2 = 0.0;
  double residual_max = 0.0;
  std::vector<std::string> warnings;
};

/// Vorticity -Lap(u) = F_u / eps^2 at the nodes.
Eigen::VectorXd vorticity_field(const EllipticProblem& pb, const Eigen::VectorXd& v);

VortexDiagnostics vorticity_extract(const EllipticProblem& pb, const Eigen::VectorXd& v);

/// I(w) = (delta^2/2) int |Dw|^2 - 1/(p+1) sum int chi (excess)_+^{p+1}, with the
/// Dirichlet term written as (1/2) int w * source. For a solved field the source
/// is c (-Lap_h) v; for an assembled ansatz it is its exact source. Returned in
/// the w variable whatever the problem variable is.
double energy_eval(const EllipticProblem& pb, const Eigen::VectorXd& v, const Eigen::VectorXd& source);
double energy_eval(const EllipticProblem& pb, const Eigen::VectorXd& v);
/// Quadrature energy of the ansatz on the problem grid.
double ansatz_energy(const EllipticProblem& pb, const AnsatzField& af, int threads = 0);

/// Pre-asymptotic closed form of the ansatz energy from the core parameters.
double closed_form_energy(const VortexSystem& vs, const GreenEvaluator& ge, const CoreParameters& cp);

/// Critical point of the reduced energy Z -> closed_form_energy(Z) at fixed eps,
/// searched by Newton from `start` with finite-difference derivatives. Kernel
/// directions of the Hessian (rotations of a disk, say) are left untouched.
struct ReducedPositions {
  std::vector<Vec2> z;
  int iterations = 0;
  double grad_norm = 0.0;  // of energy / delta^2
  double max_shift = 0.0;  // from start
  bool converged = false;
};

ReducedPositions reduced_critical_point(const VortexSystem& vs, const GreenEvaluator& ge,
                                        const HarmonicBackground& q, double eps,
                                        const RadialProfile& rp, double tol = 1e-9,
                                        int max_iter = 40);

struct EnergySeries {
  std::vector<double> eps;
  std::vector<double> energy;
  double p = 2.0;
  double bigR = 0.0;
};

struct LeadingFit {
  double constant = 0.0;  // C in I ln(R/eps)/delta^2 = C + c1 ln L / L + c2 / L
  double c1 = 0.0;
  double c2 = 0.0;
  double rms = 0.0;
};

/// Least-squares fit of the leading coefficient of I in 1/ln(R/eps).
LeadingFit fit_leading_constant(const EnergySeries& s);

struct KrConsistencyReport {
  std::vector<double> eps;
  std::vector<double> scaled_difference;  // (I_a - I_b) |ln eps|^2 / delta^2
  double fitted_phi_difference = 0.0;
  double remainder_coefficient = 0.0;
  std::vector<double> remainder_ratio;  // residual / (ln|ln eps| / |ln eps|)
  double phi_difference = 0.0;          // reference from the Phi functional
  double relative_error = 0.0;          // fitted vs reference
};

/// Energy differences between two configurations against (delta^2/|ln eps|^2) dPhi.
KrConsistencyReport kr_consistency(const EnergySeries& a, const EnergySeries& b, double phi_a,
                                   double phi_b);

struct FlowField {
  std::shared_ptr<const Grid> grid;
  Eigen::VectorXd vx, vy, pressure, curl, curl_wide, divergence;
  std::vector<char> div_valid;
  double velocity_max = 0.0;
  double divergence_max = 0.0;
  double divergence_ratio = 0.0;  // max |div v| / max |v| over regular nodes
  double curl_core_max = 0.0;
  double curl_outside_max = 0.0;
  double curl_outside_ratio = 0.0;
  double curl_wide_outside_ratio = 0.0;
  double flux_error_max = 0.0;  // max |v.n - v_n| at boundary-adjacent nodes
  double flux_scale = 0.0;      // max |v_n| sampled
  double boundary_spacing = 0.0;
  double flux_stencil_ratio = 0.0;  // error over the per-node stencil allowance; <= 1 expected
  double stationarity_ratio = 0.0;
};

/// Velocity (grad(u - q))^perp, pressure and checks. `vn` gives the configured
/// outward flux at a boundary parameter; it may be empty when q is zero.
FlowField reconstruct_flow(const EllipticProblem& pb, const Eigen::VectorXd& v,
                           const HarmonicBackground& q,
                           const std::function<double(double)>& vn = {});

}  // namespace pvreg
